#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lieforge/derivations.hpp"
#include "lieforge/lie_algebra.hpp"

namespace lieforge {

/// Coordinates of D ⋉ L: the D block (one coordinate per basis element of D)
/// comes first, then the L block.
struct SemidirectLayout {
  std::size_t d_dim = 0;
  std::size_t l_dim = 0;

  std::size_t total_dim() const { return d_dim + l_dim; }
  friend bool operator==(const SemidirectLayout&, const SemidirectLayout&) = default;
};

/// D ⋉ L with [(d,x),(d',y)] = ([d,d'], [x,y] + d(y) - d'(x)), the
/// commutator written in D's basis. NOT_CLOSED if some commutator of basis
/// derivations leaves D.
std::pair<LieAlgebra, SemidirectLayout> semidirect(const LieAlgebra& L, const DerivationSpace& D);

/// span{(d_i, 0)}. LAYOUT_MISMATCH when D does not fit the layout.
Subspace lift_D(const SemidirectLayout& layout, const DerivationSpace& D);
/// span{(0, e_j)}.
Subspace lift_L(const SemidirectLayout& layout);

/// Embeds (d, x) as a coordinate vector of the semidirect product.
Vector lift_pair(const SemidirectLayout& layout, const Vector& d_coords, const Vector& x);
/// The L block of a semidirect coordinate vector.
Vector l_block(const SemidirectLayout& layout, const Vector& v);
Vector d_block(const SemidirectLayout& layout, const Vector& v);

/// Left-normed [[...[x_1, x_2]...], x_n]; BAD_PARAMS on an empty list.
Vector n_fold_bracket(const LieAlgebra& L, const std::vector<Vector>& xs);
inline constexpr std::string_view kBracketConvention = "left-normed [[...[x_1,x_2]...],x_n]";

/// Block sum with zero cross brackets. Colliding basis names get suffixes
/// "1" and "2".
LieAlgebra direct_sum(const LieAlgebra& L1, const LieAlgebra& L2);

/// Transports the brackets to the basis e'_j = sum_i p(i, j) e_i (columns of
/// p). Basis names are kept positionally. SINGULAR_MATRIX if det(p) = 0.
LieAlgebra change_basis(const LieAlgebra& L, const Matrix& p);

/// Standard fixtures. Names: abelian(n), heisenberg(k), nonabelian2, sl2,
/// strictly_upper(n), upper_triangular(n). UNKNOWN_NAME / BAD_PARAMS.
LieAlgebra catalog(std::string_view name, const std::vector<long>& params = {});

/// Parses "name", "name:p1,p2" and '+'-joined direct sums such as
/// "sl2+nonabelian2".
LieAlgebra catalog_from_string(std::string_view text);

struct CatalogEntry {
  std::string name;
  std::size_t param_count;
  long min_param;
  long max_param;
};
const std::vector<CatalogEntry>& catalog_entries();

}  // namespace lieforge
