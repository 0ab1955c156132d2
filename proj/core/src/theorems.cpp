#include "lieforge/theorems.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lieforge/construct.hpp"
#include "lieforge/error.hpp"
#include "lieforge/random.hpp"

namespace lieforge {

Witness Witness::subspace(const Subspace& s) { return Witness{"subspace-rref", s.basis()}; }

Witness Witness::matrix(const Matrix& m) {
  Witness w{"matrix-rows", {}};
  for (std::size_t i = 0; i < m.rows(); ++i) w.rows.push_back(m.row(i));
  return w;
}

Witness Witness::matrices(const std::vector<Matrix>& ms) {
  Witness w{"matrices-row-major", {}};
  for (const auto& m : ms) w.rows.push_back(m.vectorize());
  return w;
}

bool TheoremReport::hypotheses_hold() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.holds; });
}

void finalize(TheoremReport& report) {
  report.implication_ok = !report.hypotheses_hold() || report.conclusion.holds;
  if (!report.implication_ok)
    report.diagnostics.push_back(std::string(kFatalMarker) +
                                 ": hypotheses hold but the conclusion fails");
}

namespace {

void require_n(std::size_t n) {
  if (n <= 1) throw Error(ErrorCode::BadN, "n must be greater than 1");
}

void require_ambient(const LieAlgebra& L, const Subspace& S) {
  if (S.ambient_dim() != L.dim()) throw Error(ErrorCode::DimensionMismatch, "subspace ambient dimension differs from dim(L)");
}

std::string dims_of(const std::vector<Subspace>& chain) {
  std::ostringstream os;
  for (std::size_t i = 0; i < chain.size(); ++i) os << (i ? " " : "") << chain[i].dim();
  return os.str();
}

std::string power(std::size_t n) { return "L^" + std::to_string(n); }

struct StepRecorder {
  TheoremReport& report;
  bool all = true;

  void operator()(const std::string& id, const std::string& what, bool holds) {
    all = all && holds;
    report.diagnostics.push_back(id + (holds ? " pass: " : " FAIL: ") + what);
  }
};

}  // namespace

TheoremReport check_theorem1(const LieAlgebra& L, const Subspace& A, std::size_t n) {
  require_n(n);
  require_ambient(L, A);
  TheoremReport r;
  r.theorem_id = "theorem1";
  const Subspace full = L.full_space();
  const Subspace AL = product_space(L, A, full);
  const Subspace Ln = lower_central_term(L, n);
  r.hypotheses.push_back({"H1: A is abelian, [A,A] = 0", is_abelian_subspace(L, A), Witness::subspace(A)});
  r.hypotheses.push_back({"H2: " + power(n) + " is contained in [A,L]", subset(Ln, AL), Witness::subspace(AL)});
  const auto derived = derived_series(L);
  r.conclusion = {"L is solvable (derived series reaches 0)", derived.back().is_zero()};
  r.diagnostics.push_back("n = " + std::to_string(n));
  r.diagnostics.push_back("dim L = " + std::to_string(L.dim()) + ", dim A = " + std::to_string(A.dim()) +
                          ", dim [A,L] = " + std::to_string(AL.dim()) + ", dim " + power(n) + " = " +
                          std::to_string(Ln.dim()));
  r.diagnostics.push_back("lower central series dims: " + dims_of(lower_central_series(L)));
  r.diagnostics.push_back("derived series dims: " + dims_of(derived));
  finalize(r);
  return r;
}

std::optional<std::size_t> minimal_witness_n(const LieAlgebra& L, const Subspace& A, std::size_t max_n) {
  if (max_n < 2) throw Error(ErrorCode::BadN, "max_n must be at least 2");
  require_ambient(L, A);
  const Subspace AL = product_space(L, A, L.full_space());
  const auto series = lower_central_series(L);
  auto term = [&](std::size_t k) { return k - 1 < series.size() ? series[k - 1] : series.back(); };
  for (std::size_t n = 2; n <= max_n; ++n) {
    if (!subset(term(n), AL)) continue;
    for (std::size_t later = n + 1; later <= max_n; ++later)
      if (!subset(term(later), AL)) throw std::logic_error("containment L^n in [A,L] is not monotone in n");
    return n;
  }
  return std::nullopt;
}

TheoremReport audit_theorem1_proof(const LieAlgebra& L, const Subspace& A, std::size_t n) {
  const TheoremReport check = check_theorem1(L, A, n);
  if (!check.hypotheses_hold())
    throw Error(ErrorCode::NotApplicable, "theorem1 hypotheses fail; there is no proof to replay");
  TheoremReport r;
  r.theorem_id = "theorem1-proof";
  r.hypotheses = check.hypotheses;
  StepRecorder step{r};

  const Subspace full = L.full_space();
  const Subspace S = lower_central_term(L, n - 1);
  const Subspace S_prime = product_space(L, S, S);
  const Subspace Ln = lower_central_term(L, n);
  const Subspace AL = product_space(L, A, full);
  r.diagnostics.push_back("S = " + power(n - 1) + ", dim S = " + std::to_string(S.dim()) +
                          ", dim S' = " + std::to_string(S_prime.dim()));

  const bool ideal = is_ideal(L, S);
  step("S1", "S = " + power(n - 1) + " is an ideal of L", ideal);
  step("S2", "S' = [S,S] is contained in " + power(n) + ", which is contained in [A,L]",
       subset(S_prime, Ln) && subset(Ln, AL));

  bool traces_vanish = ideal;
  std::size_t pairs = 0;
  if (ideal) {
    std::vector<Matrix> ad_x;
    for (const auto& x : S.basis()) ad_x.push_back(ad_on_ideal(L, S, x));
    for (const auto& y : S_prime.basis()) {
      const Matrix ad_y = ad_on_ideal(L, S, y);
      for (const auto& ax : ad_x) {
        ++pairs;
        if (!trace_of_product(ax, ad_y).is_zero()) traces_vanish = false;
      }
    }
  }
  step("S3", "Tr(ad_S x ad_S y) = 0 for all basis x of S and y of S' (" + std::to_string(pairs) + " pairs)",
       traces_vanish);
  step("S4", "S is solvable (derived series of S reaches 0)", is_solvable(L, S));
  const std::size_t derived_index = n - 2;
  step("S5", "L^(" + std::to_string(derived_index) + ") is contained in " + power(n - 1),
       subset(derived_term(L, derived_index), S));
  step("S6", "L is solvable", is_solvable(L));

  r.conclusion = {"every proof step S1-S6 holds", step.all};
  finalize(r);
  return r;
}

TheoremReport check_theorem2(const LieAlgebra& L, const DerivationSpace& D, std::size_t n) {
  require_n(n);
  if (D.algebra_dim() != L.dim()) throw Error(ErrorCode::DimensionMismatch, "D acts on a different dimension");
  TheoremReport r;
  r.theorem_id = "theorem2";
  bool all_derivations = true;
  for (const auto& d : D.basis()) all_derivations = all_derivations && is_derivation(L, d).ok();
  const Subspace images = sum_of_images(L, D);
  const Subspace Ln = lower_central_term(L, n);
  r.hypotheses.push_back({"H1: every basis element of D is a derivation of L", all_derivations,
                          Witness::matrices(D.basis())});
  r.hypotheses.push_back({"H2: D is abelian (basis elements commute)", is_abelian_derivation_space(D), std::nullopt});
  r.hypotheses.push_back({"H3: " + power(n) + " is contained in the sum of d(L) over d in D", subset(Ln, images),
                          Witness::subspace(images)});
  const auto derived = derived_series(L);
  r.conclusion = {"L is solvable (derived series reaches 0)", derived.back().is_zero()};
  r.diagnostics.push_back("n = " + std::to_string(n));
  r.diagnostics.push_back("dim L = " + std::to_string(L.dim()) + ", dim D = " + std::to_string(D.dim()) +
                          ", dim sum d(L) = " + std::to_string(images.dim()) + ", dim " + power(n) + " = " +
                          std::to_string(Ln.dim()));
  r.diagnostics.push_back("derived series dims: " + dims_of(derived));
  r.diagnostics.push_back("matrices vectorized row-major; n-fold brackets " + std::string(kBracketConvention));
  finalize(r);
  return r;
}

TheoremReport replay_theorem2_reduction(const LieAlgebra& L, const DerivationSpace& D, std::size_t n) {
  const TheoremReport check = check_theorem2(L, D, n);
  if (!check.hypotheses_hold())
    throw Error(ErrorCode::NotApplicable, "theorem2 hypotheses fail; there is no reduction to replay");
  TheoremReport r;
  r.theorem_id = "theorem2-reduction";
  r.hypotheses = check.hypotheses;
  StepRecorder step{r};

  const auto [hat, layout] = semidirect(L, D);
  const Subspace d_hat = lift_D(layout, D);
  const Subspace full_hat = hat.full_space();
  const Subspace hat_n = lower_central_term(hat, n);
  const Subspace d_hat_bracket = product_space(hat, d_hat, full_hat);
  r.diagnostics.push_back("semidirect product: dim " + std::to_string(hat.dim()) + " (D block " +
                          std::to_string(layout.d_dim) + " first, then L block " + std::to_string(layout.l_dim) +
                          "), satisfies the Lie axioms: " + (validate(hat).ok() ? "true" : "false"));
  r.diagnostics.push_back("dim Lhat^" + std::to_string(n) + " = " + std::to_string(hat_n.dim()) +
                          ", dim [Dhat, Lhat] = " + std::to_string(d_hat_bracket.dim()));

  step("R1", "Lhat^" + std::to_string(n) + " is contained in [Dhat, Lhat], where Lhat = D x| L and Dhat = (D, 0)",
       subset(hat_n, d_hat_bracket));
  const TheoremReport t1 = check_theorem1(hat, d_hat, n);
  step("R2", "theorem1 on (Lhat, Dhat, n): hypotheses hold and Lhat is solvable",
       t1.hypotheses_hold() && t1.conclusion.holds && t1.implication_ok);
  step("R3", "Lhat is solvable", is_solvable(hat));
  step("R4", "L embeds as the ideal (0, L) of Lhat and is solvable", is_ideal(hat, lift_L(layout)) && is_solvable(L));

  r.conclusion = {"every reduction step R1-R4 holds", step.all};
  finalize(r);
  return r;
}

TheoremReport check_single_derivation(const LieAlgebra& L, const Matrix& d, std::size_t n) {
  require_n(n);
  TheoremReport r = check_theorem2(L, DerivationSpace(L.dim(), {d}), n);
  r.theorem_id = "single-derivation";
  r.hypotheses[0].witness = Witness::matrix(d);
  r.hypotheses[0].holds = is_derivation(L, d).ok();
  r.hypotheses[0].name = "H1: d is a derivation of L";
  r.hypotheses[1].name = "H2: span{d} is abelian";
  r.hypotheses[2].name = "H3: " + power(n) + " is contained in d(L)";
  r.diagnostics.erase(std::remove_if(r.diagnostics.begin(), r.diagnostics.end(),
                                     [](const std::string& s) { return s.rfind(kFatalMarker, 0) == 0; }),
                      r.diagnostics.end());
  finalize(r);
  return r;
}

TheoremReport check_corollary1(const LieAlgebra& L, const Subspace& A) {
  require_ambient(L, A);
  TheoremReport r;
  r.theorem_id = "corollary1";
  const Matrix killing = killing_matrix(L);
  const Rational killing_det = det(killing);
  const Subspace AL = product_space(L, A, L.full_space());
  r.hypotheses.push_back({"H1: L is semisimple (det of Killing matrix is nonzero)", !killing_det.is_zero(),
                          Witness::matrix(killing)});
  r.hypotheses.push_back({"H2: A is abelian, [A,A] = 0", is_abelian_subspace(L, A), Witness::subspace(A)});
  r.conclusion = {"[A,L] is a proper subspace of L", AL.dim() < L.dim()};
  r.diagnostics.push_back("det Killing = " + killing_det.str());
  r.diagnostics.push_back("dim L = " + std::to_string(L.dim()) + ", dim A = " + std::to_string(A.dim()) +
                          ", dim [A,L] = " + std::to_string(AL.dim()));
  finalize(r);
  return r;
}

TheoremReport check_jacobson(const LieAlgebra& L, const Matrix& d) {
  TheoremReport r;
  r.theorem_id = "jacobson";
  const DerivationCheck derivation = is_derivation(L, d);
  const Rational d_det = det(d);
  r.hypotheses.push_back({"H1: d is a derivation of L", derivation.ok(), Witness::matrix(d)});
  r.hypotheses.push_back({"H2: d is invertible (det d != 0)", !d_det.is_zero(), std::nullopt});
  const auto lower = lower_central_series(L);
  r.conclusion = {"L is nilpotent (lower central series reaches 0)", lower.back().is_zero()};
  r.diagnostics.push_back("det d = " + d_det.str());
  r.diagnostics.push_back("derivation identity violations: " + std::to_string(derivation.violations.size()));
  r.diagnostics.push_back("lower central series dims: " + dims_of(lower));
  finalize(r);
  return r;
}

TheoremReport check_cartan_criterion(const LieAlgebra& L) {
  TheoremReport r;
  r.theorem_id = "cartan-criterion";
  const ValidationReport valid = validate(L);
  r.hypotheses.push_back({"H1: L satisfies antisymmetry and Jacobi over Q", valid.ok(), std::nullopt});
  const bool cartan = is_solvable_cartan(L);
  const bool series = is_solvable(L);
  r.conclusion = {"Killing form test on L x [L,L] agrees with the derived series", cartan == series};
  r.diagnostics.push_back(std::string("Killing form vanishes on L x [L,L]: ") + (cartan ? "true" : "false"));
  r.diagnostics.push_back(std::string("derived series reaches 0: ") + (series ? "true" : "false"));
  finalize(r);
  return r;
}

std::vector<Subspace> abelian_candidates(const LieAlgebra& L, std::size_t budget, std::uint64_t seed) {
  const std::size_t n = L.dim();
  std::vector<Subspace> out;
  auto push = [&](const Subspace& s) {
    if (out.size() >= budget || s.is_zero()) return;
    if (std::find(out.begin(), out.end(), s) != out.end()) return;
    if (!is_abelian_subspace(L, s)) throw std::logic_error("abelian candidate is not abelian");
    out.push_back(s);
  };
  std::vector<Subspace> lines;
  for (std::size_t i = 0; i < n; ++i) lines.push_back(Subspace::span({L.basis_element(i)}, n));
  for (const auto& line : lines) push(line);
  const Subspace z = center(L);
  push(z);
  for (const auto& line : lines) push(subspace_sum(line, z));

  Rng rng(seed);
  const std::size_t tries = 4 * budget + 16;
  for (std::size_t t = 0; t < tries && out.size() < budget && n > 0; ++t) {
    const Vector x = rng.small_vector(n, -2, 2);
    if (is_zero(x)) continue;
    const Subspace c = centralizer(L, Subspace::span({x}, n));
    Vector y(n);
    for (const auto& b : c.basis()) axpy(y, Rational(rng.small_int(-2, 2)), b);
    push(Subspace::span({x, y}, n));
  }
  return out;
}

}  // namespace lieforge
