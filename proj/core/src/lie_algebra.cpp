#include "lieforge/lie_algebra.hpp"

#include <set>

#include "lieforge/error.hpp"

namespace lieforge {

void StructureConstants::set_bracket(std::size_t i, std::size_t j, const Vector& value) {
  if (value.size() != dim_ || i >= dim_ || j >= dim_)
    throw Error(ErrorCode::DimensionMismatch, "set_bracket: index or vector length out of range");
  for (std::size_t k = 0; k < dim_; ++k) {
    (*this)(i, j, k) = value[k];
    (*this)(j, i, k) = -value[k];
  }
}

LieAlgebra::LieAlgebra(std::vector<std::string> basis_names, StructureConstants constants)
    : names_(std::move(basis_names)), c_(std::move(constants)) {
  if (c_.dim() != names_.size())
    throw Error(ErrorCode::DimensionMismatch, "structure constants do not match the basis size");
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw Error(ErrorCode::BadParams, "empty basis name");
    if (!seen.insert(name).second) throw Error(ErrorCode::BadParams, "duplicate basis name '" + name + "'");
  }
}

LieAlgebra LieAlgebra::abelian_on(std::vector<std::string> basis_names) {
  const auto n = basis_names.size();
  return LieAlgebra(std::move(basis_names), StructureConstants(n));
}

namespace {

void require_element(const LieAlgebra& L, const Vector& x) {
  if (x.size() != L.dim()) throw Error(ErrorCode::DimensionMismatch, "element length differs from dim(L)");
}

void require_subspace(const LieAlgebra& L, const Subspace& S) {
  if (S.ambient_dim() != L.dim())
    throw Error(ErrorCode::DimensionMismatch, "subspace ambient dimension differs from dim(L)");
}

// Descending chain starting at `start`, where step(term) gives the next term.
template <typename Step>
std::vector<Subspace> stabilizing_chain(Subspace start, Step step) {
  std::vector<Subspace> chain{std::move(start)};
  for (;;) {
    Subspace next = step(chain.back());
    if (next == chain.back()) break;
    chain.push_back(std::move(next));
  }
  return chain;
}

}  // namespace

Vector jacobi_residual(const LieAlgebra& L, const Vector& x, const Vector& y, const Vector& z) {
  Vector r = bracket(L, bracket(L, x, y), z);
  r = add(r, bracket(L, bracket(L, y, z), x));
  return add(r, bracket(L, bracket(L, z, x), y));
}

ValidationReport validate(const LieAlgebra& L) {
  ValidationReport report;
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!(L.constant(i, j, k) + L.constant(j, i, k)).is_zero()) {
          report.antisymmetry.push_back({i, j});
          break;
        }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector r = jacobi_residual(L, L.basis_element(i), L.basis_element(j), L.basis_element(k));
        if (!is_zero(r)) report.jacobi.push_back({i, j, k, std::move(r)});
      }
  return report;
}

Vector bracket(const LieAlgebra& L, const Vector& x, const Vector& y) {
  require_element(L, x);
  require_element(L, y);
  const std::size_t n = L.dim();
  Vector r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Rational w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!L.constant(i, j, k).is_zero()) r[k].add_product(w, L.constant(i, j, k));
    }
  }
  return r;
}

Matrix ad_matrix(const LieAlgebra& L, const Vector& x) {
  require_element(L, x);
  const std::size_t n = L.dim();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!L.constant(i, j, k).is_zero()) m(k, j).add_product(x[i], L.constant(i, j, k));
  }
  return m;
}

Subspace product_space(const LieAlgebra& L, const Subspace& U, const Subspace& V) {
  require_subspace(L, U);
  require_subspace(L, V);
  std::vector<Vector> products;
  products.reserve(U.dim() * V.dim());
  for (const auto& u : U.basis())
    for (const auto& v : V.basis()) products.push_back(bracket(L, u, v));
  return Subspace::span(products, L.dim());
}

std::vector<Subspace> lower_central_series(const LieAlgebra& L) {
  const Subspace full = L.full_space();
  return stabilizing_chain(full, [&](const Subspace& term) { return product_space(L, term, full); });
}

std::vector<Subspace> derived_series(const LieAlgebra& L) { return derived_series(L, L.full_space()); }

std::vector<Subspace> derived_series(const LieAlgebra& L, const Subspace& S) {
  require_subspace(L, S);
  return stabilizing_chain(S, [&](const Subspace& term) { return product_space(L, term, term); });
}

Subspace lower_central_term(const LieAlgebra& L, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::BadN, "lower central series is indexed from 1");
  const auto series = lower_central_series(L);
  return k - 1 < series.size() ? series[k - 1] : series.back();
}

Subspace derived_term(const LieAlgebra& L, std::size_t k) {
  const auto series = derived_series(L);
  return k < series.size() ? series[k] : series.back();
}

bool is_solvable(const LieAlgebra& L) { return derived_series(L).back().is_zero(); }

bool is_nilpotent(const LieAlgebra& L) { return lower_central_series(L).back().is_zero(); }

bool is_solvable(const LieAlgebra& L, const Subspace& S) { return derived_series(L, S).back().is_zero(); }

std::optional<std::size_t> derived_length(const LieAlgebra& L) {
  const auto series = derived_series(L);
  if (!series.back().is_zero()) return std::nullopt;
  return series.size() - 1;
}

Rational killing_form(const LieAlgebra& L, const Vector& x, const Vector& y) {
  return trace_of_product(ad_matrix(L, x), ad_matrix(L, y));
}

Matrix killing_matrix(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Matrix> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ads.push_back(ad_matrix(L, L.basis_element(i)));
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      k(i, j) = trace_of_product(ads[i], ads[j]);
      k(j, i) = k(i, j);
    }
  return k;
}

bool is_semisimple(const LieAlgebra& L) { return !det(killing_matrix(L)).is_zero(); }

bool is_ideal(const LieAlgebra& L, const Subspace& S) {
  require_subspace(L, S);
  return subset(product_space(L, L.full_space(), S), S);
}

bool is_subalgebra(const LieAlgebra& L, const Subspace& A) {
  require_subspace(L, A);
  return subset(product_space(L, A, A), A);
}

bool is_abelian_subspace(const LieAlgebra& L, const Subspace& A) {
  require_subspace(L, A);
  return product_space(L, A, A).is_zero();
}

Matrix ad_on_ideal(const LieAlgebra& L, const Subspace& S, const Vector& x) {
  require_element(L, x);
  if (!is_ideal(L, S)) throw Error(ErrorCode::NotAnIdeal, "ad_S requires S to be an ideal");
  const std::size_t m = S.dim();
  Matrix ad(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    const auto coords = S.coordinates(bracket(L, x, S.basis()[j]));
    // is_ideal guarantees membership.
    for (std::size_t i = 0; i < m; ++i) ad(i, j) = (*coords)[i];
  }
  return ad;
}

Rational trace_form_on_ideal(const LieAlgebra& L, const Subspace& S, const Vector& x, const Vector& y) {
  require_element(L, y);
  return trace_of_product(ad_on_ideal(L, S, x), ad_on_ideal(L, S, y));
}

bool is_solvable_cartan(const LieAlgebra& L) {
  const Subspace derived = product_space(L, L.full_space(), L.full_space());
  std::vector<Matrix> derived_ads;
  for (const auto& y : derived.basis()) derived_ads.push_back(ad_matrix(L, y));
  for (std::size_t i = 0; i < L.dim(); ++i) {
    const Matrix ad_x = ad_matrix(L, L.basis_element(i));
    for (const auto& ad_y : derived_ads)
      if (!trace_of_product(ad_x, ad_y).is_zero()) return false;
  }
  return true;
}

Subspace centralizer(const LieAlgebra& L, const Subspace& A) {
  require_subspace(L, A);
  const std::size_t n = L.dim();
  // [x, a] = -ad_a x, so the centralizer is the kernel of the stacked ad_a.
  Matrix stacked(A.dim() * n, n);
  for (std::size_t b = 0; b < A.dim(); ++b) {
    const Matrix ad = ad_matrix(L, A.basis()[b]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) stacked(b * n + i, j) = ad(i, j);
  }
  return kernel(stacked);
}

Subspace center(const LieAlgebra& L) { return centralizer(L, L.full_space()); }

}  // namespace lieforge
