#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lieforge/lie_algebra.hpp"

namespace lieforge {

struct DerivationResidual {
  std::size_t i = 0;
  std::size_t j = 0;
  /// d[e_i, e_j] - [d e_i, e_j] - [e_i, d e_j]
  Vector residual;
};

struct DerivationCheck {
  std::vector<DerivationResidual> violations;
  bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }
};

/// Checks d[e_i, e_j] = [d e_i, e_j] + [e_i, d e_j] for all i < j.
/// DIMENSION_MISMATCH unless d is dim(L) x dim(L).
DerivationCheck is_derivation(const LieAlgebra& L, const Matrix& d);

/// A linear space of n x n matrices, meant to hold derivations.
///
/// The basis keeps the caller's generators in their given order, dropping
/// any that depend linearly on earlier ones. as_subspace() is the canonical
/// span inside Q^(n*n) under row-major vectorization.
///
/// The constructor does not certify the derivation identity (checkers need to
/// report on uncertified input); certified() does, and everything produced
/// by derivation_algebra() and inner_derivations() is certified.
class DerivationSpace {
 public:
  DerivationSpace() = default;
  DerivationSpace(std::size_t algebra_dim, const std::vector<Matrix>& generators);

  /// Throws BAD_PARAMS naming the first generator that is not a derivation.
  static DerivationSpace certified(const LieAlgebra& L, const std::vector<Matrix>& generators);

  std::size_t algebra_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Matrix>& basis() const { return basis_; }
  const Subspace& as_subspace() const { return space_; }

  bool contains(const Matrix& m) const;
  /// Coefficients of m in basis(), or nullopt when m is outside the space.
  std::optional<Vector> coordinates(const Matrix& m) const;
  Matrix combination(const Vector& coefficients) const;

 private:
  std::size_t n_ = 0;
  std::vector<Matrix> basis_;
  Subspace space_;
};

/// Full Der(L), obtained as the kernel of the derivation identity viewed as
/// a homogeneous system in the n^2 matrix entries.
DerivationSpace derivation_algebra(const LieAlgebra& L);
DerivationSpace inner_derivations(const LieAlgebra& L);
/// Center of Der(L) under the matrix commutator; always abelian.
DerivationSpace derivation_center(const LieAlgebra& L);

/// Sum of d(L) over a basis of D.
Subspace sum_of_images(const LieAlgebra& L, const DerivationSpace& D);

bool is_abelian_derivation_space(const DerivationSpace& D);
/// Every commutator of basis elements lies back in D.
bool is_closed_under_commutator(const DerivationSpace& D);

struct InvertibleWitness {
  Vector coefficients;
  Matrix matrix;
  std::size_t attempt = 0;
};

/// Looks for a combination of D's basis with nonzero determinant. The
/// coefficient grid {0, 1, -1, 2, -2}^dim(D) is walked first (odometer order,
/// last coordinate fastest, zero vector skipped) for up to half of `attempts`,
/// then seeded random vectors from the same range. Each determinant evaluated
/// is one attempt. Not finding a witness proves nothing.
std::optional<InvertibleWitness> find_invertible_element(const DerivationSpace& D, std::size_t attempts,
                                                         std::uint64_t seed);

}  // namespace lieforge
