#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lieforge/matrix.hpp"

namespace lieforge {

/// A linear subspace of Q^ambient_dim held in reduced row echelon form.
///
/// The basis is the unique RREF basis: no zero rows, strictly increasing
/// pivot columns, pivot entries 1, zeros above and below every pivot. Two
/// subspaces are equal exactly when their stored bases are identical.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  /// Smallest subspace containing `vectors`. DIMENSION_MISMATCH on any
  /// vector whose length differs from ambient_dim.
  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == ambient_dim_; }

  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Matrix basis_matrix() const { return Matrix::from_rows(basis_, ambient_dim_); }

  bool contains(const Vector& v) const;
  /// Coefficients of v in the canonical basis, or nullopt when v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Subspace(std::size_t ambient_dim, std::vector<Vector> basis, std::vector<std::size_t> pivots)
      : ambient_dim_(ambient_dim), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t ambient_dim_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);
Subspace subspace_sum(const Subspace& u, const Subspace& v);
bool subset(const Subspace& u, const Subspace& v);
bool equal(const Subspace& u, const Subspace& v);
bool contains(const Subspace& u, const Vector& v);

/// Null space {v : m v = 0}, ambient dimension cols(m).
Subspace kernel(const Matrix& m);
/// Column space, ambient dimension rows(m).
Subspace image(const Matrix& m);
/// Row space, ambient dimension cols(m).
Subspace row_space(const Matrix& m);

}  // namespace lieforge
