#include "lieforge/construct.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

#include "lieforge/error.hpp"

namespace lieforge {

namespace {

std::string unused_name(std::string base, const std::set<std::string>& taken) {
  while (taken.count(base)) base = "D" + base;
  return base;
}

}  // namespace

std::pair<LieAlgebra, SemidirectLayout> semidirect(const LieAlgebra& L, const DerivationSpace& D) {
  if (D.algebra_dim() != L.dim()) throw Error(ErrorCode::DimensionMismatch, "D acts on a different dimension");
  const SemidirectLayout layout{D.dim(), L.dim()};
  const std::size_t m = layout.d_dim;
  const std::size_t n = layout.l_dim;
  StructureConstants c(layout.total_dim());

  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const auto coords = D.coordinates(commutator(D.basis()[a], D.basis()[b]));
      if (!coords) throw Error(ErrorCode::NotClosed, "commutator of derivations leaves D");
      Vector v(layout.total_dim());
      std::copy(coords->begin(), coords->end(), v.begin());
      c.set_bracket(a, b, v);
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t j = 0; j < n; ++j) {
      Vector v(layout.total_dim());
      for (std::size_t k = 0; k < n; ++k) v[m + k] = D.basis()[a](k, j);
      c.set_bracket(a, m + j, v);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v(layout.total_dim());
      for (std::size_t k = 0; k < n; ++k) v[m + k] = L.constant(i, j, k);
      c.set_bracket(m + i, m + j, v);
    }

  std::set<std::string> taken(L.basis_names().begin(), L.basis_names().end());
  std::vector<std::string> names;
  for (std::size_t a = 0; a < m; ++a) {
    names.push_back(unused_name(m == 1 ? "t" : "t" + std::to_string(a + 1), taken));
    taken.insert(names.back());
  }
  names.insert(names.end(), L.basis_names().begin(), L.basis_names().end());
  return {LieAlgebra(std::move(names), std::move(c)), layout};
}

Subspace lift_D(const SemidirectLayout& layout, const DerivationSpace& D) {
  if (D.dim() != layout.d_dim || D.algebra_dim() != layout.l_dim)
    throw Error(ErrorCode::LayoutMismatch, "D does not match the semidirect layout");
  std::vector<Vector> rows;
  for (std::size_t a = 0; a < layout.d_dim; ++a) rows.push_back(unit_vector(layout.total_dim(), a));
  return Subspace::span(rows, layout.total_dim());
}

Subspace lift_L(const SemidirectLayout& layout) {
  std::vector<Vector> rows;
  for (std::size_t j = 0; j < layout.l_dim; ++j) rows.push_back(unit_vector(layout.total_dim(), layout.d_dim + j));
  return Subspace::span(rows, layout.total_dim());
}

Vector lift_pair(const SemidirectLayout& layout, const Vector& d_coords, const Vector& x) {
  if (d_coords.size() != layout.d_dim || x.size() != layout.l_dim)
    throw Error(ErrorCode::LayoutMismatch, "pair does not match the semidirect layout");
  Vector v(d_coords);
  v.insert(v.end(), x.begin(), x.end());
  return v;
}

Vector l_block(const SemidirectLayout& layout, const Vector& v) {
  if (v.size() != layout.total_dim()) throw Error(ErrorCode::LayoutMismatch, "vector length");
  return Vector(v.begin() + static_cast<std::ptrdiff_t>(layout.d_dim), v.end());
}

Vector d_block(const SemidirectLayout& layout, const Vector& v) {
  if (v.size() != layout.total_dim()) throw Error(ErrorCode::LayoutMismatch, "vector length");
  return Vector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(layout.d_dim));
}

Vector n_fold_bracket(const LieAlgebra& L, const std::vector<Vector>& xs) {
  if (xs.empty()) throw Error(ErrorCode::BadParams, "n_fold_bracket needs at least one element");
  Vector acc = xs.front();
  if (acc.size() != L.dim()) throw Error(ErrorCode::DimensionMismatch, "element length differs from dim(L)");
  for (std::size_t i = 1; i < xs.size(); ++i) acc = bracket(L, acc, xs[i]);
  return acc;
}

LieAlgebra direct_sum(const LieAlgebra& L1, const LieAlgebra& L2) {
  const std::size_t n1 = L1.dim();
  const std::size_t n = n1 + L2.dim();
  StructureConstants c(n);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t k = 0; k < n1; ++k) c(i, j, k) = L1.constant(i, j, k);
  for (std::size_t i = 0; i < L2.dim(); ++i)
    for (std::size_t j = 0; j < L2.dim(); ++j)
      for (std::size_t k = 0; k < L2.dim(); ++k) c(n1 + i, n1 + j, n1 + k) = L2.constant(i, j, k);

  std::vector<std::string> names(L1.basis_names());
  names.insert(names.end(), L2.basis_names().begin(), L2.basis_names().end());
  std::set<std::string> distinct(names.begin(), names.end());
  if (distinct.size() != names.size()) {
    std::string s1 = "1";
    std::string s2 = "2";
    for (;;) {
      names.clear();
      for (const auto& nm : L1.basis_names()) names.push_back(nm + s1);
      for (const auto& nm : L2.basis_names()) names.push_back(nm + s2);
      if (std::set<std::string>(names.begin(), names.end()).size() == names.size()) break;
      s1 += "_1";
      s2 += "_2";
    }
  }
  return LieAlgebra(std::move(names), std::move(c));
}

LieAlgebra change_basis(const LieAlgebra& L, const Matrix& p) {
  const std::size_t n = L.dim();
  if (p.rows() != n || p.cols() != n) throw Error(ErrorCode::DimensionMismatch, "basis change must be dim(L) x dim(L)");
  const auto p_inv = inverse(p);
  if (!p_inv) throw Error(ErrorCode::SingularMatrix, "basis change matrix is singular");
  std::vector<Vector> new_basis;
  for (std::size_t j = 0; j < n; ++j) new_basis.push_back(p.column(j));
  StructureConstants c(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      c.set_bracket(a, b, p_inv->apply(bracket(L, new_basis[a], new_basis[b])));
  return LieAlgebra(L.basis_names(), std::move(c));
}

namespace {

LieAlgebra make_abelian(long n) {
  std::vector<std::string> names;
  for (long i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  return LieAlgebra::abelian_on(std::move(names));
}

LieAlgebra make_heisenberg(long k) {
  const auto dim = static_cast<std::size_t>(2 * k + 1);
  std::vector<std::string> names;
  for (long i = 1; i <= k; ++i) names.push_back(k == 1 ? "x" : "x" + std::to_string(i));
  for (long i = 1; i <= k; ++i) names.push_back(k == 1 ? "y" : "y" + std::to_string(i));
  names.push_back("z");
  StructureConstants c(dim);
  const auto ku = static_cast<std::size_t>(k);
  for (std::size_t i = 0; i < ku; ++i) c.set_bracket(i, ku + i, unit_vector(dim, dim - 1));
  return LieAlgebra(std::move(names), std::move(c));
}

LieAlgebra make_nonabelian2() {
  StructureConstants c(2);
  c.set_bracket(0, 1, {0, 1});
  return LieAlgebra({"a", "b"}, std::move(c));
}

LieAlgebra make_sl2() {
  // Basis order (e, h, f).
  StructureConstants c(3);
  c.set_bracket(1, 0, {2, 0, 0});
  c.set_bracket(1, 2, {0, 0, -2});
  c.set_bracket(0, 2, {0, 1, 0});
  return LieAlgebra({"e", "h", "f"}, std::move(c));
}

// Matrix units E_ij spanning upper (strict or not) triangular n x n matrices,
// row-major, with [E_ij, E_kl] = delta_jk E_il - delta_li E_kj.
LieAlgebra make_triangular(long n, bool strict) {
  struct Unit {
    long i, j;
  };
  std::vector<Unit> units;
  for (long i = 1; i <= n; ++i)
    for (long j = strict ? i + 1 : i; j <= n; ++j) units.push_back({i, j});
  auto index_of = [&](long i, long j) -> std::size_t {
    for (std::size_t u = 0; u < units.size(); ++u)
      if (units[u].i == i && units[u].j == j) return u;
    throw std::logic_error("matrix unit outside the triangular range");
  };
  std::vector<std::string> names;
  for (const auto& u : units)
    names.push_back("E" + std::to_string(u.i) + (n >= 10 ? "_" : "") + std::to_string(u.j));
  const std::size_t dim = units.size();
  StructureConstants c(dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a + 1; b < dim; ++b) {
      Vector v(dim);
      if (units[a].j == units[b].i) v[index_of(units[a].i, units[b].j)] += 1;
      if (units[b].j == units[a].i) v[index_of(units[b].i, units[a].j)] -= 1;
      c.set_bracket(a, b, v);
    }
  return LieAlgebra(std::move(names), std::move(c));
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries{
      {"abelian", 1, 1, 16},
      {"heisenberg", 1, 1, 6},
      {"nonabelian2", 0, 0, 0},
      {"sl2", 0, 0, 0},
      {"strictly_upper", 1, 2, 6},
      {"upper_triangular", 1, 1, 5},
  };
  return entries;
}

LieAlgebra catalog(std::string_view name, const std::vector<long>& params) {
  const auto& entries = catalog_entries();
  const auto it = std::find_if(entries.begin(), entries.end(), [&](const CatalogEntry& e) { return e.name == name; });
  if (it == entries.end()) throw Error(ErrorCode::UnknownName, "no catalog algebra named '" + std::string(name) + "'");
  if (params.size() != it->param_count)
    throw Error(ErrorCode::BadParams, it->name + " takes " + std::to_string(it->param_count) + " parameter(s)");
  for (long p : params)
    if (p < it->min_param || p > it->max_param)
      throw Error(ErrorCode::BadParams, it->name + " parameter must lie in [" + std::to_string(it->min_param) + ", " +
                                            std::to_string(it->max_param) + "]");
  if (name == "abelian") return make_abelian(params[0]);
  if (name == "heisenberg") return make_heisenberg(params[0]);
  if (name == "nonabelian2") return make_nonabelian2();
  if (name == "sl2") return make_sl2();
  if (name == "strictly_upper") return make_triangular(params[0], true);
  return make_triangular(params[0], false);
}

namespace {

LieAlgebra single_catalog_entry(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  std::vector<long> params;
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (true) {
      const auto comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      long value = 0;
      const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
        throw Error(ErrorCode::BadParams, "bad catalog parameter '" + std::string(item) + "'");
      params.push_back(value);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  return catalog(name, params);
}

}  // namespace

LieAlgebra catalog_from_string(std::string_view text) {
  const auto plus = text.find('+');
  if (plus == std::string_view::npos) return single_catalog_entry(text);
  return direct_sum(single_catalog_entry(text.substr(0, plus)), catalog_from_string(text.substr(plus + 1)));
}

}  // namespace lieforge
