#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <vector>

#include "lieforge/rational.hpp"

namespace lieforge {

/// Coordinate vector; also the representation of Lie algebra elements.
using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Rational& s, const Vector& v);
/// a += s * v, in place.
void axpy(Vector& a, const Rational& s, const Vector& v);

/// Dense exact matrix. Shape is fixed at construction.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector& entries);
  /// Throws DIMENSION_MISMATCH on ragged input. An empty list gives 0 x cols.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
  /// Inverse of vectorize(): row-major reshape of an n*n vector.
  static Matrix from_vectorized(const Vector& v, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  /// Row-major flattening; this order is the fixed ambient coordinate order
  /// for spaces of matrices.
  Vector vectorize() const { return data_; }
  bool is_zero() const;

  /// Matrix-vector product m * v.
  Vector apply(const Vector& v) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

Matrix mul(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix scale(const Rational& s, const Matrix& m);
/// a*b - b*a
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
Rational trace(const Matrix& m);
/// Tr(a b) without forming the product.
Rational trace_of_product(const Matrix& a, const Matrix& b);
Rational det(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Some x with a * x = b, or nullopt if the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

}  // namespace lieforge
