#include "lieforge/subspace.hpp"

#include "lieforge/error.hpp"

namespace lieforge {

namespace {

void require_same_ambient(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "subspaces of different ambient dimension");
}

}  // namespace

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, {}, {}); }

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Vector> basis;
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    basis.push_back(unit_vector(ambient_dim, i));
    pivots.push_back(i);
  }
  return Subspace(ambient_dim, std::move(basis), std::move(pivots));
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
  for (const auto& v : vectors)
    if (v.size() != ambient_dim)
      throw Error(ErrorCode::DimensionMismatch, "span: vector length differs from ambient dimension");
  const auto r = rref(Matrix::from_rows(vectors, ambient_dim));
  std::vector<Vector> basis;
  basis.reserve(r.rank);
  for (std::size_t i = 0; i < r.rank; ++i) basis.push_back(r.reduced.row(i));
  return Subspace(ambient_dim, std::move(basis), r.pivots);
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_dim_) throw Error(ErrorCode::DimensionMismatch, "coordinates: vector length");
  // With an RREF basis the coefficient of row i is the pivot entry of v.
  Vector coords(basis_.size());
  Vector residual(v);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    coords[i] = v[pivots_[i]];
    axpy(residual, -coords[i], basis_[i]);
  }
  if (!lieforge::is_zero(residual)) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
  return Subspace::span(vectors, ambient_dim);
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  if (u.is_zero()) return v;
  if (v.is_zero()) return u;
  std::vector<Vector> rows(u.basis());
  rows.insert(rows.end(), v.basis().begin(), v.basis().end());
  return Subspace::span(rows, u.ambient_dim());
}

bool subset(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  if (u.dim() > v.dim()) return false;
  for (const auto& b : u.basis())
    if (!v.contains(b)) return false;
  return true;
}

bool equal(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  return u == v;
}

bool contains(const Subspace& u, const Vector& v) { return u.contains(v); }

Subspace kernel(const Matrix& m) {
  const auto r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(basis, n);
}

Subspace image(const Matrix& m) { return row_space(transpose(m)); }

Subspace row_space(const Matrix& m) {
  std::vector<Vector> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return Subspace::span(rows, m.cols());
}

}  // namespace lieforge
