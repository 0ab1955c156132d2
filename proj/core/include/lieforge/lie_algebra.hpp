#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lieforge/matrix.hpp"
#include "lieforge/subspace.hpp"

namespace lieforge {

/// Dense structure-constant tensor: c(i, j, k) is the e_k coefficient of
/// [e_i, e_j].
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : dim_(dim), data_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dim_ + j) * dim_ + k];
  }
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * dim_ + j) * dim_ + k]; }

  /// Sets [e_i, e_j] = value and [e_j, e_i] = -value.
  void set_bracket(std::size_t i, std::size_t j, const Vector& value);

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> data_;
};

/// Finite-dimensional algebra over Q given by named basis and structure
/// constants. Construction does not check the Lie axioms; see validate().
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// BAD_PARAMS on duplicate or empty names, DIMENSION_MISMATCH when the
  /// tensor does not match the basis size.
  LieAlgebra(std::vector<std::string> basis_names, StructureConstants constants);

  static LieAlgebra abelian_on(std::vector<std::string> basis_names);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const StructureConstants& constants() const { return c_; }
  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const { return c_(i, j, k); }

  Vector basis_element(std::size_t i) const { return unit_vector(dim(), i); }
  Subspace full_space() const { return Subspace::full(dim()); }
  Subspace zero_space() const { return Subspace::zero(dim()); }

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  std::vector<std::string> names_;
  StructureConstants c_;
};

struct AntisymmetryViolation {
  std::size_t i = 0;
  std::size_t j = 0;
};

struct JacobiViolation {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Vector residual;
};

struct ValidationReport {
  std::vector<AntisymmetryViolation> antisymmetry;
  std::vector<JacobiViolation> jacobi;

  bool ok() const { return antisymmetry.empty() && jacobi.empty(); }
};

/// Every pair i <= j with c(i,j,.) != -c(j,i,.) and every triple i < j < k
/// with nonzero Jacobi residual.
ValidationReport validate(const LieAlgebra& L);

/// [[x,y],z] + [[y,z],x] + [[z,x],y]
Vector jacobi_residual(const LieAlgebra& L, const Vector& x, const Vector& y, const Vector& z);

Vector bracket(const LieAlgebra& L, const Vector& x, const Vector& y);
/// Column j is [x, e_j].
Matrix ad_matrix(const LieAlgebra& L, const Vector& x);

/// span{[u, v] : u in U, v in V}
Subspace product_space(const LieAlgebra& L, const Subspace& U, const Subspace& V);

/// L^1 = L, L^{k+1} = [L^k, L]; the list ends at the first term equal to its
/// successor, so the last entry is the stable term.
std::vector<Subspace> lower_central_series(const LieAlgebra& L);
/// L^(0) = L, L^(k+1) = [L^(k), L^(k)], truncated the same way.
std::vector<Subspace> derived_series(const LieAlgebra& L);
/// Derived series of the subalgebra S, computed inside L.
std::vector<Subspace> derived_series(const LieAlgebra& L, const Subspace& S);

/// L^k for k >= 1, past stabilization included.
Subspace lower_central_term(const LieAlgebra& L, std::size_t k);
/// L^(k) for k >= 0.
Subspace derived_term(const LieAlgebra& L, std::size_t k);

bool is_solvable(const LieAlgebra& L);
bool is_nilpotent(const LieAlgebra& L);
bool is_solvable(const LieAlgebra& L, const Subspace& S);

/// Number of steps for the derived series to reach 0, if it does.
std::optional<std::size_t> derived_length(const LieAlgebra& L);

Rational killing_form(const LieAlgebra& L, const Vector& x, const Vector& y);
Matrix killing_matrix(const LieAlgebra& L);
/// Cartan's criterion: nondegenerate Killing form.
bool is_semisimple(const LieAlgebra& L);

bool is_ideal(const LieAlgebra& L, const Subspace& S);
bool is_subalgebra(const LieAlgebra& L, const Subspace& A);
bool is_abelian_subspace(const LieAlgebra& L, const Subspace& A);

/// Matrix of s -> [x, s] on the ideal S in its canonical basis.
/// NOT_AN_IDEAL if S is not an ideal.
Matrix ad_on_ideal(const LieAlgebra& L, const Subspace& S, const Vector& x);
/// Tr(ad_S x ad_S y).
Rational trace_form_on_ideal(const LieAlgebra& L, const Subspace& S, const Vector& x, const Vector& y);

/// Solvability via the Killing form vanishing on L x [L, L].
bool is_solvable_cartan(const LieAlgebra& L);

Subspace centralizer(const LieAlgebra& L, const Subspace& A);
Subspace center(const LieAlgebra& L);

}  // namespace lieforge
