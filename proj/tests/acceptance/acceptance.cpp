// Acceptance suite: one PASS/FAIL line per criterion.
//
//   lieforge_acceptance           run every criterion
//   lieforge_acceptance AC4 AC7   run the named criteria
//
// Exit status is 0 only if every selected criterion passes. All arithmetic is
// exact, so the only tolerances are the pinned rates and budgets below.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli/cli.hpp"
#include "cli/presentation.hpp"
#include "cli/report_format.hpp"
#include "lieforge/construct.hpp"
#include "lieforge/derivations.hpp"
#include "lieforge/lie_algebra.hpp"
#include "lieforge/random.hpp"
#include "lieforge/sweeps.hpp"
#include "lieforge/theorems.hpp"
#include "support/algebras.hpp"
#include "support/oracle.hpp"

using namespace lieforge;

namespace {

constexpr std::uint64_t kSeed = 7;
constexpr std::size_t kCandidateBudget = 50;
constexpr std::size_t kRandomDerivations = 20;
constexpr std::size_t kExtraBasisChanges = 100;
constexpr std::size_t kTraceTriples = 100;
constexpr std::size_t kJacobsonWitnesses = 10;
constexpr std::size_t kWitnessAttempts = 200;
constexpr std::size_t kSl2Attempts = 1000;
constexpr double kRequiredAgreement = 1.0;  // fraction of instances
constexpr std::size_t kMaxFatal = 0;
constexpr double kTimeBudgetSeconds = 60.0;  // per criterion

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

std::uint64_t instance_seed(std::size_t index) { return kSeed * 1000003ULL + index; }

SweepOptions sweep_options(bool replay) {
  SweepOptions o;
  o.candidate_budget = kCandidateBudget;
  o.random_derivations = kRandomDerivations;
  o.extra_basis_changes = kExtraBasisChanges;
  o.replay_proofs = replay;
  return o;
}

std::string first_items(const std::vector<std::string>& items, std::size_t count) {
  std::string out;
  for (std::size_t i = 0; i < items.size() && i < count; ++i) out += (i ? ", " : "") + items[i];
  if (items.size() > count) out += ", ...";
  return out;
}

oracle::Tensor tensor_of(const LieAlgebra& L) {
  oracle::Tensor t = oracle::empty_tensor(L.dim());
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j)
      for (std::size_t k = 0; k < L.dim(); ++k) {
        const Rational& c = L.constant(i, j, k);
        if (!c.is_integer()) throw std::runtime_error("non-integer structure constant");
        t[i][j][k] = std::stol(c.numerator());
      }
  return t;
}

int run_cli(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  if (out) *out = o.str();
  return code;
}

int run_cli_on(const LieAlgebra& L, const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = cli::run_on(L, args, o, e);
  if (out) *out = o.str();
  return code;
}

void sweep_soundness(Outcome& r, SweepSuite suite) {
  const auto s = run_sweep(suite, kSeed, sweep_options(false));
  const std::size_t ok = s.instances - s.fatal;
  const double rate = s.instances ? static_cast<double>(ok) / static_cast<double>(s.instances) : 0.0;
  r.detail << s.algebras << " algebras, " << s.instances << " instances, " << s.hypotheses_held
           << " with hypotheses holding, " << s.fatal << " FATAL";
  r.require(s.algebras == 78, "corpus size is not 78");
  r.require(s.instances > 0, "no instances");
  r.require(rate >= kRequiredAgreement && s.fatal <= kMaxFatal,
            "FATAL instances: " + first_items(s.fatal_instances, 5));
}

// 1. Soundness of the abelian-subalgebra statement.
void ac1(Outcome& r) { sweep_soundness(r, SweepSuite::Theorem1); }

// 2. Soundness of the derivation statement.
void ac2(Outcome& r) { sweep_soundness(r, SweepSuite::Theorem2); }

// 3. Proof replays on every instance of 1-2 whose hypotheses hold, plus the
//    heisenberg(1), diag(1,1,2), n = 2 fixture.
void ac3(Outcome& r) {
  const auto h = catalog("heisenberg", {1});
  const DerivationSpace D(3, {Matrix::diagonal({1, 1, 2})});
  const auto [Lhat, layout] = semidirect(h, D);
  const Subspace xyz = span({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, 4);
  const Subspace hat2 = lower_central_term(Lhat, 2);
  const Subspace dl = product_space(Lhat, lift_D(layout, D), Lhat.full_space());
  const bool fixture = hat2 == xyz && dl == xyz && replay_theorem2_reduction(h, D, 2).conclusion.holds;
  r.require(fixture, "fixture Lhat^2 = [Dhat, Lhat] = span{x,y,z} fails");

  const auto t1 = run_sweep(SweepSuite::Theorem1, kSeed, sweep_options(true));
  const auto t2 = run_sweep(SweepSuite::Theorem2, kSeed, sweep_options(true));
  r.detail << "fixture " << (fixture ? "ok" : "FAIL") << "; six-step replays " << t1.replays << " with "
           << t1.replay_failures << " failing; four-step replays " << t2.replays << " with " << t2.replay_failures
           << " failing";
  r.require(t1.replays == t1.hypotheses_held, "theorem1 replay count differs from held instances");
  r.require(t2.replays == t2.hypotheses_held, "theorem2 replay count differs from held instances");
  auto failing = [](const SweepSummary& s) {
    std::vector<std::string> out;
    for (const auto& k : s.fatal_instances)
      if (k.find("(proof replay)") != std::string::npos) out.push_back(k);
    return out;
  };
  r.require(t1.replay_failures == 0, "six-step replay failures: " + first_items(failing(t1), 3));
  std::size_t at_two = 0;
  for (const auto& k : failing(t2)) at_two += k.find(" n=2 ") != std::string::npos;
  r.require(t2.replay_failures == 0, "four-step replay failures (" + std::to_string(at_two) + " at n=2, " +
                                         std::to_string(t2.replay_failures - at_two) +
                                         " at n=3): " + first_items(failing(t2), 3));
}

// 4. Series and Killing-form solvability agree exactly.
void ac4(Outcome& r) {
  auto corpus = standard_corpus(kSeed);
  const auto bases = base_corpus();
  Rng rng(instance_seed(corpus.size()));
  for (std::size_t i = 0; i < kExtraBasisChanges; ++i) {
    const auto& base = bases[i % bases.size()];
    corpus.push_back({base.key + "#extra" + std::to_string(i + 1),
                      change_basis(base.algebra, random_invertible_matrix(base.algebra.dim(), rng))});
  }
  std::size_t agree = 0;
  std::vector<std::string> disagreements;
  for (const auto& [key, L] : corpus) {
    if (is_solvable(L) == is_solvable_cartan(L))
      ++agree;
    else
      disagreements.push_back(key);
  }
  const double rate = static_cast<double>(agree) / static_cast<double>(corpus.size());
  r.detail << agree << "/" << corpus.size() << " algebras agree";
  r.require(corpus.size() == 78 + kExtraBasisChanges, "unexpected corpus size");
  r.require(rate >= kRequiredAgreement, "disagreements: " + first_items(disagreements, 5));

  const auto sweep = run_sweep(SweepSuite::CartanVsSeries, kSeed, sweep_options(false));
  r.require(sweep.instances == corpus.size() && sweep.fatal == 0, "cartan-vs-series sweep disagrees");
}

// 5. Derivation algebras: exact basis elements and dimensions, confirmed by
//    an independent brute-force elimination.
void ac5(Outcome& r) {
  std::size_t checked = 0;
  for (const auto& [key, L] : standard_corpus(kSeed)) {
    const auto der = derivation_algebra(L);
    for (const auto& d : der.basis()) {
      ++checked;
      r.require(is_derivation(L, d).violations.empty(), key + ": basis element with nonzero residual");
    }
  }
  for (long n = 1; n <= 6; ++n)
    r.require(derivation_algebra(catalog("abelian", {n})).dim() == static_cast<std::size_t>(n * n),
              "dim Der(abelian(" + std::to_string(n) + ")) != n^2");

  struct Expected {
    const char* name;
    LieAlgebra algebra;
    oracle::Tensor hand;
    std::size_t dim;
  };
  const std::vector<Expected> cases = {
      {"sl2", catalog("sl2"), oracle::sl2_ehf(), 3},
      {"heisenberg(1)", catalog("heisenberg", {1}), oracle::heisenberg1(), 6},
      {"nonabelian2", catalog("nonabelian2"), oracle::nonabelian2(), 2},
  };
  for (const auto& c : cases) {
    const std::size_t lib = derivation_algebra(c.algebra).dim();
    const std::size_t brute = oracle::derivation_dimension(c.hand);
    r.detail << "dim Der(" << c.name << ") = " << lib << " (brute force " << brute << "); ";
    r.require(lib == c.dim && brute == c.dim, std::string("dimension mismatch for ") + c.name);
    r.require(tensor_of(c.algebra) == c.hand, std::string("catalog differs from hand-written ") + c.name);
  }
  for (const auto& [key, L] : base_corpus())
    r.require(derivation_algebra(L).dim() == oracle::derivation_dimension(tensor_of(L)),
              key + ": dimension differs from brute force");
  r.detail << checked << " basis derivations verified";
}

// 6. Killing matrix of sl2 and semisimplicity.
void ac6(Outcome& r) {
  const Matrix expected{{0, 0, 4}, {0, 8, 0}, {4, 0, 0}};
  const auto L = catalog("sl2");
  const Matrix k = killing_matrix(L);
  const Rational d = det(k);
  const auto hand = oracle::killing(oracle::sl2_ehf());
  r.detail << "det = " << d << " (oracle " << oracle::det(hand).num << ")";
  r.require(k == expected, "Killing matrix differs");
  r.require(d == Rational(-128) && oracle::det(hand) == oracle::Frac(-128), "determinant is not -128");
  r.require(is_semisimple(L), "sl2 not semisimple");
  std::size_t solvable = 0;
  for (const auto& [key, M] : standard_corpus(kSeed))
    if (is_solvable(M)) {
      ++solvable;
      r.require(!is_semisimple(M), key + " is solvable and semisimple");
    }
  r.detail << "; " << solvable << " solvable corpus members non-semisimple";
}

// 7. Invariance of the trace form on ideals.
void ac7(Outcome& r) {
  const auto corpus = standard_corpus(kSeed);
  std::size_t checks = 0;
  for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
    const auto& [key, L] = corpus[idx];
    const std::vector<std::pair<const char*, Subspace>> ideals = {
        {"L", L.full_space()}, {"L^2", lower_central_term(L, 2)}, {"L^(1)", derived_term(L, 1)}, {"Z", center(L)}};
    Rng rng(instance_seed(idx));
    for (std::size_t t = 0; t < kTraceTriples; ++t) {
      const Vector x = rng.small_vector(L.dim(), -3, 3), y = rng.small_vector(L.dim(), -3, 3),
                   z = rng.small_vector(L.dim(), -3, 3);
      const Vector xy = bracket(L, x, y), yz = bracket(L, y, z);
      for (const auto& [name, S] : ideals) {
        ++checks;
        if (trace_form_on_ideal(L, S, xy, z) != trace_form_on_ideal(L, S, x, yz))
          r.require(false, key + " on " + name);
      }
    }
  }
  r.detail << checks << " exact identities over " << corpus.size() << " algebras";
}

// 8. Abelian subalgebras of semisimple algebras give proper [A,L].
void ac8(Outcome& r) {
  const auto corpus = semisimple_corpus(kSeed);
  std::size_t instances = 0;
  for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
    const auto& [key, L] = corpus[idx];
    for (const auto& A : abelian_candidates(L, kCandidateBudget, instance_seed(idx))) {
      ++instances;
      r.require(product_space(L, A, L.full_space()).dim() < L.dim(), key + ": [A,L] = L");
    }
  }
  const auto s = run_sweep(SweepSuite::Corollary1, kSeed, sweep_options(false));
  r.detail << corpus.size() << " algebras, " << instances << " candidates, sweep FATAL " << s.fatal;
  r.require(s.instances == instances, "sweep instance count differs");
  r.require(s.fatal <= kMaxFatal && s.hypotheses_held == s.instances, "corollary sweep not clean");
}

// 9. Invertible derivations force nilpotency; sl2 has no invertible inner one.
void ac9(Outcome& r) {
  const auto h = catalog("heisenberg", {1});
  const auto jh = check_jacobson(h, Matrix::diagonal({1, 1, 2}));
  r.require(jh.hypotheses_hold() && jh.conclusion.holds && is_nilpotent(h), "heisenberg(1) diag(1,1,2)");

  const auto L = catalog("strictly_upper", {4});
  const auto der = derivation_algebra(L);
  std::set<std::vector<Rational>> distinct;
  std::size_t found = 0;
  for (std::size_t i = 0; i < kJacobsonWitnesses; ++i) {
    const auto w = find_invertible_element(der, kWitnessAttempts, kSeed + i);
    if (!w) continue;
    ++found;
    distinct.insert(w->matrix.vectorize());
    const auto report = check_jacobson(L, w->matrix);
    r.require(report.hypotheses_hold() && report.conclusion.holds && is_nilpotent(L),
              "witness " + std::to_string(i) + " does not certify nilpotency");
  }
  r.require(found == kJacobsonWitnesses, "only " + std::to_string(found) + " witnesses found");
  r.require(distinct.size() == kJacobsonWitnesses, "witnesses are not distinct");

  const auto sl2_witness = find_invertible_element(inner_derivations(catalog("sl2")), kSl2Attempts, kSeed);
  r.require(!sl2_witness, "sl2 has an invertible inner derivation witness");
  r.detail << found << " strictly_upper(4) witnesses (" << distinct.size() << " distinct), sl2 none in "
           << kSl2Attempts << " attempts";
}

// 10. CLI contract.
void ac10(Outcome& r) {
  std::size_t round_trips = 0;
  for (const auto& entry : catalog_entries()) {
    std::vector<std::vector<long>> params;
    if (entry.param_count == 0)
      params.push_back({});
    else
      for (long p = entry.min_param; p <= entry.max_param; ++p) params.push_back({p});
    for (const auto& p : params) {
      ++round_trips;
      const auto L = catalog(entry.name, p);
      const auto once = cli::parse_presentation(cli::serialize_presentation(L));
      const auto twice = cli::parse_presentation(cli::serialize_presentation(once));
      r.require(once == L && twice.constants() == L.constants(), entry.name + " round trip");
    }
  }

  std::size_t identical = 0;
  for (const char* suite : {"cor1", "jacobson", "cartan-vs-series"}) {
    std::string a, b;
    const int ca = run_cli({"sweep", "--suite", suite, "--seed", "7", "--format", "json"}, &a);
    const int cb = run_cli({"sweep", "--suite", suite, "--seed", "7", "--format", "json"}, &b);
    r.require(ca == cli::kExitOk && ca == cb && a == b && !a.empty(), std::string("sweep ") + suite + " differs");
    identical += a == b;
  }
  for (SweepSuite suite : {SweepSuite::Theorem1, SweepSuite::Theorem2}) {
    const auto a = cli::serialize_sweep(run_sweep(suite, kSeed, sweep_options(false)), cli::Format::Json);
    const auto b = cli::serialize_sweep(run_sweep(suite, kSeed, sweep_options(false)), cli::Format::Json);
    r.require(a == b, std::string("sweep ") + std::string(to_string(suite)) + " differs");
    identical += a == b;
  }

  // [a,b] = b listed together with [b,a] = b breaks antisymmetry.
  const std::string broken = "dim 2\nbasis a b\n[a,b]=b\n[b,a]=b\n";
  const auto path = std::filesystem::temp_directory_path() / "lieforge_acceptance_broken.lie";
  std::ofstream(path) << broken;
  const int from_file = run_cli({"validate", "--file", path.string()});
  const int jacobson_from_file = run_cli({"jacobson", "--file", path.string(), "--derivation", "[[1,0],[0,1]]"});
  std::filesystem::remove(path);
  r.require(from_file == cli::kExitInput, "validate on broken file exits " + std::to_string(from_file));
  r.require(jacobson_from_file == cli::kExitInput, "checker accepted a broken file");

  StructureConstants c(2);
  c(0, 1, 1) = 1;  // [a,b] = b, [b,a] = 0
  const LieAlgebra smuggled_pair({"a", "b"}, c);
  StructureConstants line(1);
  line(0, 0, 0) = 1;  // [e,e] = e
  const LieAlgebra smuggled_line({"e"}, line);
  const int validate_pair = run_cli_on(smuggled_pair, {"validate"});
  const int validate_line = run_cli_on(smuggled_line, {"validate"});
  std::string fatal_out;
  const int fatal = run_cli_on(smuggled_line, {"jacobson", "--derivation", "[[1]]"}, &fatal_out);
  r.require(validate_pair == cli::kExitInput && validate_line == cli::kExitInput, "validate accepted a corrupted tensor");
  r.require(fatal == cli::kExitFatal && fatal_out.find("FATAL") != std::string::npos, "smuggled tensor not FATAL");

  // Valid inputs never exit 2.
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"jacobson", "--catalog", "heisenberg:1", "--derivation", "diag(1,1,2)"},
           {"theorem1", "--catalog", "sl2", "--subalg", "h"},
           {"theorem2", "--catalog", "heisenberg:1", "--derivations", "der-basis", "--n", "2"}})
    r.require(run_cli(args) != cli::kExitFatal, "valid input exited 2: " + args[0]);

  r.detail << round_trips << " catalog round trips, " << identical << " sweeps bit-identical, validate exit "
           << from_file << ", smuggled tensor exit " << fatal;
}

struct Criterion {
  const char* id;
  const char* title;
  std::function<void(Outcome&)> body;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"AC1", "abelian-subalgebra soundness sweep", ac1},
      {"AC2", "derivation soundness sweep", ac2},
      {"AC3", "proof replays", ac3},
      {"AC4", "Cartan criterion agrees with series", ac4},
      {"AC5", "derivation algebra exactness and dimensions", ac5},
      {"AC6", "Killing form of sl2 and semisimplicity", ac6},
      {"AC7", "trace-form invariance on ideals", ac7},
      {"AC8", "abelian subalgebras of semisimple algebras", ac8},
      {"AC9", "invertible derivations and nilpotency", ac9},
      {"AC10", "command-line contract", ac10},
  };
  std::set<std::string> selected(argv + 1, argv + argc);
  for (const auto& s : selected) {
    bool known = false;
    for (const auto& c : criteria) known = known || s == c.id;
    if (!known) {
      std::cerr << "unknown criterion " << s << "\n";
      return 2;
    }
  }

  bool all = true;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(outcome);
    } catch (const std::exception& e) {
      outcome.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    outcome.require(seconds < kTimeBudgetSeconds, "over the time budget");
    all = all && outcome.pass;
    std::cout << c.id << " " << (outcome.pass ? "PASS" : "FAIL") << "  " << c.title << ": " << outcome.detail.str()
              << " [" << std::fixed;
    std::cout.precision(2);
    std::cout << seconds << " s]";
    for (const auto& f : outcome.failures) std::cout << "\n    failed: " << f;
    std::cout << std::endl;
    std::cout.unsetf(std::ios::fixed);
  }
  return all ? 0 : 1;
}
