#include <gtest/gtest.h>

#include "lieforge/construct.hpp"
#include "lieforge/error.hpp"
#include "lieforge/lie_algebra.hpp"
#include "lieforge/random.hpp"
#include "lieforge/sweeps.hpp"
#include "support/algebras.hpp"
#include "support/generators.hpp"

using namespace lieforge;

namespace {

std::vector<std::size_t> dims(const std::vector<Subspace>& series) {
  std::vector<std::size_t> out;
  for (const auto& s : series) out.push_back(s.dim());
  return out;
}

using Dims = std::vector<std::size_t>;

}  // namespace

TEST(LieAlgebra, ConstructionErrors) {
  EXPECT_THROW(LieAlgebra({"a", "a"}, StructureConstants(2)), Error);
  EXPECT_THROW(LieAlgebra({"a", ""}, StructureConstants(2)), Error);
  EXPECT_THROW(LieAlgebra({"a", "b"}, StructureConstants(3)), Error);
}

TEST(Validate, CatalogAlgebrasAreValid) {
  for (const auto& [key, L] : base_corpus()) EXPECT_TRUE(validate(L).ok()) << key;
  EXPECT_TRUE(validate(testalg::sl2()).ok());
}

TEST(Validate, DetectsBrokenAntisymmetry) {
  StructureConstants c(2);
  c(0, 1, 1) = 1;  // [a,b] = b but [b,a] left zero
  const auto report = validate(LieAlgebra({"a", "b"}, c));
  ASSERT_EQ(report.antisymmetry.size(), 1u);
  EXPECT_EQ(report.antisymmetry[0].i, 0u);
  EXPECT_EQ(report.antisymmetry[0].j, 1u);
}

TEST(Validate, DetectsSelfBracket) {
  StructureConstants c(1);
  c(0, 0, 0) = 1;
  EXPECT_FALSE(validate(LieAlgebra({"e"}, c)).ok());
}

TEST(Validate, DetectsJacobiFailure) {
  // [x,y]=z, [y,z]=x, [x,z]=x: the Jacobi sum on (x,y,z) is -z.
  StructureConstants c(3);
  c.set_bracket(0, 1, {0, 0, 1});
  c.set_bracket(1, 2, {1, 0, 0});
  c.set_bracket(0, 2, {1, 0, 0});
  const auto report = validate(LieAlgebra({"x", "y", "z"}, c));
  EXPECT_TRUE(report.antisymmetry.empty());
  ASSERT_EQ(report.jacobi.size(), 1u);
  EXPECT_FALSE(is_zero(report.jacobi[0].residual));
}

TEST(Bracket, ExamplesAndErrors) {
  const auto L = testalg::nonabelian2();
  EXPECT_EQ(bracket(L, {1, 0}, {0, 1}), (Vector{0, 1}));
  EXPECT_TRUE(is_zero(bracket(L, {1, 0}, {1, 0})));
  const auto s = testalg::sl2();
  EXPECT_EQ(bracket(s, {0, 1, 0}, {1, 0, 0}), (Vector{2, 0, 0}));
  EXPECT_EQ(bracket(s, {1, 0, 0}, {0, 0, 1}), (Vector{0, 1, 0}));
  EXPECT_THROW(bracket(L, {1, 0, 0}, {0, 1}), Error);
  EXPECT_EQ(bracket(catalog("abelian", {3}), {1, 2, 3}, {4, 5, 6}), (Vector{0, 0, 0}));
}

TEST(Bracket, BilinearAntisymmetricJacobi) {
  testgen::Gen g(31);
  for (const auto& [key, L] : base_corpus()) {
    const std::size_t n = L.dim();
    for (int t = 0; t < 10; ++t) {
      const Vector x = g.vector(n), y = g.vector(n), z = g.vector(n);
      const Rational a = g.rational();
      EXPECT_EQ(bracket(L, x, y), scale(Rational(-1), bracket(L, y, x))) << key;
      EXPECT_EQ(bracket(L, add(scale(a, x), z), y), add(scale(a, bracket(L, x, y)), bracket(L, z, y))) << key;
      EXPECT_TRUE(is_zero(jacobi_residual(L, x, y, z))) << key;
    }
  }
}

TEST(AdMatrix, Examples) {
  const auto s = testalg::sl2();
  EXPECT_EQ(ad_matrix(s, {0, 1, 0}), Matrix::diagonal({2, 0, -2}));
  EXPECT_EQ(ad_matrix(testalg::nonabelian2(), {1, 0}), (Matrix{{0, 0}, {0, 1}}));
  EXPECT_TRUE(ad_matrix(catalog("abelian", {2}), {1, 1}).is_zero());
}

TEST(AdMatrix, IsAHomomorphism) {
  testgen::Gen g(37);
  for (const auto& [key, L] : base_corpus()) {
    for (int t = 0; t < 8; ++t) {
      const Vector x = g.vector(L.dim()), y = g.vector(L.dim());
      EXPECT_EQ(ad_matrix(L, bracket(L, x, y)), commutator(ad_matrix(L, x), ad_matrix(L, y))) << key;
    }
  }
}

TEST(ProductSpace, Examples) {
  const auto L = testalg::nonabelian2();
  EXPECT_EQ(product_space(L, L.full_space(), L.full_space()), span({{0, 1}}, 2));
  const auto s = testalg::sl2();
  EXPECT_TRUE(product_space(s, s.full_space(), s.full_space()).is_full());
  EXPECT_TRUE(product_space(catalog("abelian", {3}), Subspace::full(3), Subspace::full(3)).is_zero());
  EXPECT_THROW(product_space(L, Subspace::full(3), Subspace::full(2)), Error);
}

TEST(Series, Examples) {
  EXPECT_EQ(dims(lower_central_series(testalg::heisenberg1())), (Dims{3, 1, 0}));
  EXPECT_EQ(dims(lower_central_series(testalg::nonabelian2())), (Dims{2, 1}));
  EXPECT_EQ(dims(lower_central_series(testalg::sl2())), (Dims{3}));
  EXPECT_EQ(dims(derived_series(testalg::nonabelian2())), (Dims{2, 1, 0}));
  EXPECT_EQ(dims(derived_series(testalg::sl2())), (Dims{3}));
  EXPECT_EQ(dims(derived_series(catalog("upper_triangular", {2}))), (Dims{3, 1, 0}));
  EXPECT_EQ(dims(lower_central_series(catalog("strictly_upper", {4}))), (Dims{6, 3, 1, 0}));
  EXPECT_EQ(lower_central_term(testalg::heisenberg1(), 1), Subspace::full(3));
  EXPECT_EQ(lower_central_term(testalg::heisenberg1(), 2), span({{0, 0, 1}}, 3));
  EXPECT_EQ(lower_central_term(testalg::heisenberg1(), 9), Subspace::zero(3));
  EXPECT_EQ(derived_term(testalg::nonabelian2(), 0), Subspace::full(2));
  EXPECT_EQ(derived_term(testalg::nonabelian2(), 5), Subspace::zero(2));
  EXPECT_THROW(lower_central_term(testalg::heisenberg1(), 0), Error);
}

TEST(Series, Predicates) {
  EXPECT_TRUE(is_solvable(testalg::nonabelian2()));
  EXPECT_FALSE(is_nilpotent(testalg::nonabelian2()));
  EXPECT_TRUE(is_nilpotent(testalg::heisenberg1()));
  EXPECT_FALSE(is_solvable(testalg::sl2()));
  EXPECT_FALSE(is_solvable(direct_sum(testalg::sl2(), testalg::nonabelian2())));
  EXPECT_EQ(derived_length(testalg::nonabelian2()), std::optional<std::size_t>(2));
  EXPECT_EQ(derived_length(catalog("abelian", {2})), std::optional<std::size_t>(1));
  EXPECT_EQ(derived_length(testalg::sl2()), std::nullopt);
}

TEST(Series, DescendingIdealsAndDerivedInsideLowerCentral) {
  for (const auto& [key, L] : standard_corpus(7)) {
    const auto lcs = lower_central_series(L);
    const auto ds = derived_series(L);
    for (std::size_t k = 0; k + 1 < lcs.size(); ++k) {
      EXPECT_TRUE(subset(lcs[k + 1], lcs[k])) << key;
      EXPECT_NE(lcs[k + 1], lcs[k]) << key;
    }
    for (std::size_t k = 0; k + 1 < ds.size(); ++k) EXPECT_TRUE(subset(ds[k + 1], ds[k])) << key;
    for (const auto& s : lcs) EXPECT_TRUE(is_ideal(L, s)) << key;
    for (const auto& s : ds) EXPECT_TRUE(is_ideal(L, s)) << key;
    // L^(k) ⊆ L^{k+1}, and nilpotent => solvable.
    for (std::size_t k = 0; k < 5; ++k) EXPECT_TRUE(subset(derived_term(L, k), lower_central_term(L, k + 1))) << key;
    if (is_nilpotent(L)) {
      EXPECT_TRUE(is_solvable(L)) << key;
    }
  }
}

TEST(Series, SubspaceSolvability) {
  const auto L = direct_sum(testalg::sl2(), testalg::nonabelian2());
  const Subspace radical = span({{0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}, 5);
  EXPECT_TRUE(is_solvable(L, radical));
  EXPECT_FALSE(is_solvable(L, L.full_space()));
  EXPECT_EQ(dims(derived_series(L, radical)), (Dims{2, 1, 0}));
}

TEST(Killing, Sl2Constant) {
  const Matrix expected{{0, 0, 4}, {0, 8, 0}, {4, 0, 0}};
  EXPECT_EQ(killing_matrix(testalg::sl2()), expected);
  EXPECT_EQ(killing_matrix(catalog("sl2")), expected);
  EXPECT_EQ(det(killing_matrix(testalg::sl2())), Rational(-128));
  EXPECT_EQ(killing_form(testalg::sl2(), {0, 1, 0}, {0, 1, 0}), Rational(8));
}

TEST(Killing, Examples) {
  EXPECT_EQ(killing_form(testalg::nonabelian2(), {1, 0}, {1, 0}), Rational(1));
  EXPECT_EQ(killing_form(testalg::nonabelian2(), {0, 1}, {0, 1}), Rational(0));
  EXPECT_TRUE(killing_matrix(testalg::heisenberg1()).is_zero());
  EXPECT_TRUE(is_semisimple(testalg::sl2()));
  EXPECT_TRUE(is_semisimple(direct_sum(testalg::sl2(), testalg::sl2())));
  EXPECT_FALSE(is_semisimple(testalg::nonabelian2()));
  EXPECT_FALSE(is_semisimple(direct_sum(testalg::sl2(), testalg::nonabelian2())));
}

TEST(Killing, SymmetricAndInvariant) {
  testgen::Gen g(41);
  for (const auto& [key, L] : base_corpus()) {
    EXPECT_EQ(transpose(killing_matrix(L)), killing_matrix(L)) << key;
    for (int t = 0; t < 6; ++t) {
      const Vector x = g.vector(L.dim()), y = g.vector(L.dim()), z = g.vector(L.dim());
      EXPECT_EQ(killing_form(L, bracket(L, x, y), z), killing_form(L, x, bracket(L, y, z))) << key;
    }
  }
}

TEST(Ideals, Examples) {
  const auto L = testalg::nonabelian2();
  EXPECT_TRUE(is_ideal(L, span({{0, 1}}, 2)));
  EXPECT_FALSE(is_ideal(L, span({{1, 0}}, 2)));
  EXPECT_TRUE(is_subalgebra(L, span({{1, 0}}, 2)));
  EXPECT_TRUE(is_abelian_subspace(L, span({{1, 0}}, 2)));
  EXPECT_FALSE(is_abelian_subspace(L, L.full_space()));
  EXPECT_FALSE(is_subalgebra(testalg::sl2(), span({{1, 0, 0}, {0, 0, 1}}, 3)));
  EXPECT_TRUE(is_ideal(L, L.zero_space()));
}

TEST(AdOnIdeal, ExamplesAndErrors) {
  const auto L = testalg::nonabelian2();
  const Subspace b = span({{0, 1}}, 2);
  EXPECT_EQ(ad_on_ideal(L, b, {1, 0}), (Matrix{{1}}));
  EXPECT_EQ(trace_form_on_ideal(L, b, {1, 0}, {1, 0}), Rational(1));
  EXPECT_EQ(ad_on_ideal(L, L.full_space(), {1, 0}), ad_matrix(L, {1, 0}));
  EXPECT_THROW(ad_on_ideal(L, span({{1, 0}}, 2), {1, 0}), Error);
  EXPECT_EQ(trace_form_on_ideal(L, L.full_space(), {1, 0}, {1, 0}), killing_form(L, {1, 0}, {1, 0}));
}

TEST(AdOnIdeal, TraceFormInvarianceOnIdeals) {
  testgen::Gen g(43);
  for (const auto& [key, L] : standard_corpus(7)) {
    const std::vector<Subspace> ideals = {L.full_space(), lower_central_term(L, 2), derived_term(L, 1), center(L)};
    for (const auto& S : ideals)
      for (int t = 0; t < 3; ++t) {
        const Vector x = g.vector(L.dim()), y = g.vector(L.dim()), z = g.vector(L.dim());
        EXPECT_EQ(trace_form_on_ideal(L, S, bracket(L, x, y), z), trace_form_on_ideal(L, S, x, bracket(L, y, z)))
            << key;
      }
  }
}

TEST(Cartan, AgreesWithSeriesOnCorpus) {
  for (const auto& [key, L] : standard_corpus(7)) EXPECT_EQ(is_solvable_cartan(L), is_solvable(L)) << key;
  EXPECT_FALSE(is_solvable_cartan(testalg::sl2()));
  EXPECT_TRUE(is_solvable_cartan(testalg::nonabelian2()));
}

TEST(Centralizer, Examples) {
  const auto h = testalg::heisenberg1();
  EXPECT_EQ(center(h), span({{0, 0, 1}}, 3));
  EXPECT_TRUE(center(testalg::sl2()).is_zero());
  EXPECT_TRUE(center(catalog("abelian", {3})).is_full());
  EXPECT_EQ(centralizer(h, span({{1, 0, 0}}, 3)), span({{1, 0, 0}, {0, 0, 1}}, 3));
  EXPECT_EQ(centralizer(testalg::sl2(), span({{0, 1, 0}}, 3)), span({{0, 1, 0}}, 3));
}

TEST(BasisChange, InvariantsArePreserved) {
  Rng rng(47);
  for (const auto& [key, L] : base_corpus()) {
    for (int t = 0; t < 3; ++t) {
      const Matrix p = random_invertible_matrix(L.dim(), rng);
      const LieAlgebra M = change_basis(L, p);
      EXPECT_TRUE(validate(M).ok()) << key;
      EXPECT_EQ(dims(lower_central_series(M)), dims(lower_central_series(L))) << key;
      EXPECT_EQ(dims(derived_series(M)), dims(derived_series(L))) << key;
      EXPECT_EQ(is_semisimple(M), is_semisimple(L)) << key;
      EXPECT_EQ(center(M).dim(), center(L).dim()) << key;
      EXPECT_EQ(rank(killing_matrix(M)), rank(killing_matrix(L))) << key;
    }
  }
}
