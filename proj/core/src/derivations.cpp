#include "lieforge/derivations.hpp"

#include <stdexcept>

#include "lieforge/error.hpp"
#include "lieforge/random.hpp"

namespace lieforge {

DerivationCheck is_derivation(const LieAlgebra& L, const Matrix& d) {
  const std::size_t n = L.dim();
  if (d.rows() != n || d.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "derivation must be a dim(L) x dim(L) matrix");
  DerivationCheck check;
  std::vector<Vector> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) images.push_back(d.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector r = d.apply(bracket(L, L.basis_element(i), L.basis_element(j)));
      r = sub(r, bracket(L, images[i], L.basis_element(j)));
      r = sub(r, bracket(L, L.basis_element(i), images[j]));
      if (!is_zero(r)) check.violations.push_back({i, j, std::move(r)});
    }
  return check;
}

DerivationSpace::DerivationSpace(std::size_t algebra_dim, const std::vector<Matrix>& generators)
    : n_(algebra_dim), space_(Subspace::zero(algebra_dim * algebra_dim)) {
  for (const auto& g : generators) {
    if (g.rows() != n_ || g.cols() != n_)
      throw Error(ErrorCode::DimensionMismatch, "derivation generator has the wrong shape");
    const Vector v = g.vectorize();
    if (space_.contains(v)) continue;
    basis_.push_back(g);
    space_ = subspace_sum(space_, Subspace::span({v}, n_ * n_));
  }
}

DerivationSpace DerivationSpace::certified(const LieAlgebra& L, const std::vector<Matrix>& generators) {
  for (std::size_t g = 0; g < generators.size(); ++g)
    if (!is_derivation(L, generators[g]))
      throw Error(ErrorCode::BadParams, "generator " + std::to_string(g) + " is not a derivation");
  return DerivationSpace(L.dim(), generators);
}

bool DerivationSpace::contains(const Matrix& m) const {
  if (m.rows() != n_ || m.cols() != n_) throw Error(ErrorCode::DimensionMismatch, "matrix shape");
  return space_.contains(m.vectorize());
}

std::optional<Vector> DerivationSpace::coordinates(const Matrix& m) const {
  if (m.rows() != n_ || m.cols() != n_) throw Error(ErrorCode::DimensionMismatch, "matrix shape");
  std::vector<Vector> columns;
  columns.reserve(basis_.size());
  for (const auto& b : basis_) columns.push_back(b.vectorize());
  return solve(Matrix::from_columns(columns, n_ * n_), m.vectorize());
}

Matrix DerivationSpace::combination(const Vector& coefficients) const {
  if (coefficients.size() != basis_.size()) throw Error(ErrorCode::DimensionMismatch, "coefficient count");
  Matrix m(n_, n_);
  for (std::size_t b = 0; b < basis_.size(); ++b)
    if (!coefficients[b].is_zero()) m = add(m, scale(coefficients[b], basis_[b]));
  return m;
}

DerivationSpace derivation_algebra(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  // Unknown d(p, q) sits at column p * n + q. For each i < j and output
  // coordinate k:  sum_l c(i,j,l) d(k,l) - sum_l d(l,i) c(l,j,k) - sum_l d(l,j) c(i,l,k) = 0.
  const std::size_t pairs = n * (n > 0 ? n - 1 : 0) / 2;
  Matrix system(pairs * n, n * n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k, ++row)
        for (std::size_t l = 0; l < n; ++l) {
          system(row, k * n + l) += L.constant(i, j, l);
          system(row, l * n + i) -= L.constant(l, j, k);
          system(row, l * n + j) -= L.constant(i, l, k);
        }
  const Subspace solutions = kernel(system);
  std::vector<Matrix> basis;
  basis.reserve(solutions.dim());
  for (const auto& v : solutions.basis()) basis.push_back(Matrix::from_vectorized(v, n));
  DerivationSpace der(n, basis);
  for (const auto& d : der.basis())
    if (!is_derivation(L, d)) throw std::logic_error("derivation_algebra produced a non-derivation");
  if (!is_closed_under_commutator(der)) throw std::logic_error("derivation_algebra is not closed under commutator");
  return der;
}

DerivationSpace inner_derivations(const LieAlgebra& L) {
  std::vector<Matrix> ads;
  ads.reserve(L.dim());
  for (std::size_t i = 0; i < L.dim(); ++i) ads.push_back(ad_matrix(L, L.basis_element(i)));
  return DerivationSpace(L.dim(), ads);
}

DerivationSpace derivation_center(const LieAlgebra& L) {
  const DerivationSpace der = derivation_algebra(L);
  const std::size_t n = L.dim();
  const std::size_t m = der.dim();
  // Unknown alpha: sum_k alpha_k [d_k, d_i] = 0 for every basis element d_i.
  Matrix system(m * n * n, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      const Vector c = commutator(der.basis()[k], der.basis()[i]).vectorize();
      for (std::size_t e = 0; e < n * n; ++e) system(i * n * n + e, k) = c[e];
    }
  const Subspace alphas = kernel(system);
  std::vector<Matrix> generators;
  for (const auto& a : alphas.basis()) generators.push_back(der.combination(a));
  return DerivationSpace(n, generators);
}

Subspace sum_of_images(const LieAlgebra& L, const DerivationSpace& D) {
  if (D.algebra_dim() != L.dim()) throw Error(ErrorCode::DimensionMismatch, "D acts on a different dimension");
  std::vector<Vector> columns;
  for (const auto& d : D.basis())
    for (std::size_t j = 0; j < d.cols(); ++j) columns.push_back(d.column(j));
  return Subspace::span(columns, L.dim());
}

bool is_abelian_derivation_space(const DerivationSpace& D) {
  const auto& b = D.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (mul(b[i], b[j]) != mul(b[j], b[i])) return false;
  return true;
}

bool is_closed_under_commutator(const DerivationSpace& D) {
  const auto& b = D.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!D.contains(commutator(b[i], b[j]))) return false;
  return true;
}

std::optional<InvertibleWitness> find_invertible_element(const DerivationSpace& D, std::size_t attempts,
                                                         std::uint64_t seed) {
  const std::size_t k = D.dim();
  if (k == 0) return std::nullopt;
  static constexpr long kDigits[] = {0, 1, -1, 2, -2};
  std::size_t attempt = 0;
  auto try_coefficients = [&](const Vector& coeffs) -> std::optional<InvertibleWitness> {
    ++attempt;
    Matrix m = D.combination(coeffs);
    if (det(m).is_zero()) return std::nullopt;
    return InvertibleWitness{coeffs, std::move(m), attempt};
  };

  std::vector<std::size_t> odometer(k, 0);
  auto advance = [&]() {
    for (std::size_t pos = k; pos-- > 0;) {
      if (++odometer[pos] < std::size(kDigits)) return true;
      odometer[pos] = 0;
    }
    return false;
  };
  // Grid phase: at most half of the attempts.
  const std::size_t grid_budget = (attempts + 1) / 2;
  while (attempt < grid_budget && advance()) {
    Vector coeffs(k);
    for (std::size_t i = 0; i < k; ++i) coeffs[i] = kDigits[odometer[i]];
    if (auto w = try_coefficients(coeffs)) return w;
  }

  Rng rng(seed);
  while (attempt < attempts) {
    const Vector coeffs = rng.small_vector(k, -2, 2);
    if (is_zero(coeffs)) {
      ++attempt;
      continue;
    }
    if (auto w = try_coefficients(coeffs)) return w;
  }
  return std::nullopt;
}

}  // namespace lieforge
