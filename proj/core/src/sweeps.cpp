#include "lieforge/sweeps.hpp"

#include <array>
#include <utility>

#include "lieforge/construct.hpp"
#include "lieforge/derivations.hpp"
#include "lieforge/random.hpp"
#include "lieforge/theorems.hpp"

namespace lieforge {

std::vector<NamedAlgebra> base_corpus() {
  std::vector<NamedAlgebra> corpus;
  for (long n = 1; n <= 4; ++n) corpus.push_back({"abelian:" + std::to_string(n), catalog("abelian", {n})});
  for (long k = 1; k <= 2; ++k) corpus.push_back({"heisenberg:" + std::to_string(k), catalog("heisenberg", {k})});
  corpus.push_back({"nonabelian2", catalog("nonabelian2")});
  for (long n = 2; n <= 3; ++n)
    corpus.push_back({"upper_triangular:" + std::to_string(n), catalog("upper_triangular", {n})});
  for (long n = 3; n <= 4; ++n)
    corpus.push_back({"strictly_upper:" + std::to_string(n), catalog("strictly_upper", {n})});
  corpus.push_back({"sl2", catalog("sl2")});
  corpus.push_back({"sl2+nonabelian2", direct_sum(catalog("sl2"), catalog("nonabelian2"))});
  return corpus;
}

std::vector<NamedAlgebra> with_basis_changes(const std::vector<NamedAlgebra>& bases, std::size_t basis_changes,
                                             std::uint64_t seed) {
  Rng rng(seed);
  std::vector<NamedAlgebra> out;
  for (const auto& base : bases) {
    out.push_back(base);
    for (std::size_t i = 1; i <= basis_changes; ++i)
      out.push_back({base.key + "#bc" + std::to_string(i),
                     change_basis(base.algebra, random_invertible_matrix(base.algebra.dim(), rng))});
  }
  return out;
}

std::vector<NamedAlgebra> standard_corpus(std::uint64_t seed) { return with_basis_changes(base_corpus(), 5, seed); }

std::vector<NamedAlgebra> semisimple_corpus(std::uint64_t seed) {
  const std::vector<NamedAlgebra> bases{{"sl2", catalog("sl2")},
                                        {"sl2+sl2", direct_sum(catalog("sl2"), catalog("sl2"))}};
  return with_basis_changes(bases, 5, seed);
}

namespace {

constexpr std::array<std::pair<SweepSuite, std::string_view>, 5> kSuiteNames{{
    {SweepSuite::Theorem1, "thm1"},
    {SweepSuite::Theorem2, "thm2"},
    {SweepSuite::Corollary1, "cor1"},
    {SweepSuite::Jacobson, "jacobson"},
    {SweepSuite::CartanVsSeries, "cartan-vs-series"},
}};

// Per-algebra counters folded into the summary.
struct Tally {
  std::size_t instances = 0, held = 0, vacuous = 0, fatal = 0, replays = 0, replay_failures = 0;
};

void record(SweepSummary& summary, Tally& tally, const std::string& key, const TheoremReport& report) {
  ++tally.instances;
  if (report.hypotheses_hold())
    ++tally.held;
  else
    ++tally.vacuous;
  if (report.fatal()) {
    ++tally.fatal;
    summary.fatal_instances.push_back(key);
  }
}

void record_replay(SweepSummary& summary, Tally& tally, const std::string& key, const TheoremReport& replay) {
  ++tally.replays;
  if (!replay.conclusion.holds || replay.fatal()) {
    ++tally.replay_failures;
    summary.fatal_instances.push_back(key + " (proof replay)");
  }
}

void fold(SweepSummary& summary, const std::string& key, const Tally& t) {
  ++summary.algebras;
  summary.instances += t.instances;
  summary.hypotheses_held += t.held;
  summary.vacuous += t.vacuous;
  summary.fatal += t.fatal;
  summary.replays += t.replays;
  summary.replay_failures += t.replay_failures;
  summary.log.push_back(key + ": instances " + std::to_string(t.instances) + ", held " + std::to_string(t.held) +
                        ", vacuous " + std::to_string(t.vacuous) + ", fatal " + std::to_string(t.fatal) +
                        ", replays " + std::to_string(t.replays) + ", replay failures " +
                        std::to_string(t.replay_failures));
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t index) { return seed * 1000003ULL + index; }

void sweep_theorem1(SweepSummary& summary, const SweepOptions& options) {
  const auto corpus = standard_corpus(summary.seed);
  for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
    const auto& [key, L] = corpus[idx];
    Tally tally;
    const auto candidates = abelian_candidates(L, options.candidate_budget, instance_seed(summary.seed, idx));
    for (std::size_t c = 0; c < candidates.size(); ++c)
      for (std::size_t n = 2; n <= 4; ++n) {
        const std::string instance = key + " A" + std::to_string(c) + " n=" + std::to_string(n);
        const auto report = check_theorem1(L, candidates[c], n);
        record(summary, tally, instance, report);
        if (options.replay_proofs && report.hypotheses_hold())
          record_replay(summary, tally, instance, audit_theorem1_proof(L, candidates[c], n));
      }
    fold(summary, key, tally);
  }
}

std::vector<DerivationSpace> derivation_candidates(const LieAlgebra& L, std::size_t random_count,
                                                   std::uint64_t seed) {
  const DerivationSpace der = derivation_algebra(L);
  std::vector<DerivationSpace> out;
  for (const auto& d : der.basis()) out.emplace_back(L.dim(), std::vector<Matrix>{d});
  const DerivationSpace centre = derivation_center(L);
  if (centre.dim() > 0) out.push_back(centre);
  Rng rng(seed);
  for (std::size_t i = 0; i < random_count && der.dim() > 0; ++i)
    out.emplace_back(L.dim(), std::vector<Matrix>{der.combination(rng.small_vector(der.dim(), -2, 2))});
  return out;
}

void sweep_theorem2(SweepSummary& summary, const SweepOptions& options) {
  const auto corpus = standard_corpus(summary.seed);
  for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
    const auto& [key, L] = corpus[idx];
    Tally tally;
    const auto spaces = derivation_candidates(L, options.random_derivations, instance_seed(summary.seed, idx));
    for (std::size_t c = 0; c < spaces.size(); ++c)
      for (std::size_t n = 2; n <= 3; ++n) {
        const std::string instance = key + " D" + std::to_string(c) + " n=" + std::to_string(n);
        const auto report = check_theorem2(L, spaces[c], n);
        record(summary, tally, instance, report);
        if (options.replay_proofs && report.hypotheses_hold())
          record_replay(summary, tally, instance, replay_theorem2_reduction(L, spaces[c], n));
      }
    fold(summary, key, tally);
  }
}

void sweep_corollary1(SweepSummary& summary, const SweepOptions& options) {
  const auto corpus = semisimple_corpus(summary.seed);
  for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
    const auto& [key, L] = corpus[idx];
    Tally tally;
    const auto candidates = abelian_candidates(L, options.candidate_budget, instance_seed(summary.seed, idx));
    for (std::size_t c = 0; c < candidates.size(); ++c)
      record(summary, tally, key + " A" + std::to_string(c), check_corollary1(L, candidates[c]));
    fold(summary, key, tally);
  }
}

void sweep_jacobson(SweepSummary& summary, const SweepOptions& options) {
  const auto corpus = standard_corpus(summary.seed);
  for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
    const auto& [key, L] = corpus[idx];
    Tally tally;
    const DerivationSpace der = derivation_algebra(L);
    for (std::size_t b = 0; b < der.dim(); ++b)
      record(summary, tally, key + " d" + std::to_string(b), check_jacobson(L, der.basis()[b]));
    if (const auto w = find_invertible_element(der, options.invertible_attempts, instance_seed(summary.seed, idx)))
      record(summary, tally, key + " witness", check_jacobson(L, w->matrix));
    fold(summary, key, tally);
  }
}

void sweep_cartan(SweepSummary& summary, const SweepOptions& options) {
  auto corpus = standard_corpus(summary.seed);
  const auto bases = base_corpus();
  Rng rng(instance_seed(summary.seed, corpus.size()));
  for (std::size_t i = 0; i < options.extra_basis_changes; ++i) {
    const auto& base = bases[i % bases.size()];
    corpus.push_back({base.key + "#extra" + std::to_string(i + 1),
                      change_basis(base.algebra, random_invertible_matrix(base.algebra.dim(), rng))});
  }
  for (const auto& [key, L] : corpus) {
    Tally tally;
    record(summary, tally, key, check_cartan_criterion(L));
    fold(summary, key, tally);
  }
}

}  // namespace

std::optional<SweepSuite> parse_suite(std::string_view name) {
  for (const auto& [suite, text] : kSuiteNames)
    if (text == name) return suite;
  return std::nullopt;
}

std::string_view to_string(SweepSuite suite) {
  for (const auto& [s, text] : kSuiteNames)
    if (s == suite) return text;
  return "unknown";
}

SweepSummary run_sweep(SweepSuite suite, std::uint64_t seed, const SweepOptions& options) {
  SweepSummary summary;
  summary.suite = suite;
  summary.seed = seed;
  switch (suite) {
    case SweepSuite::Theorem1: sweep_theorem1(summary, options); break;
    case SweepSuite::Theorem2: sweep_theorem2(summary, options); break;
    case SweepSuite::Corollary1: sweep_corollary1(summary, options); break;
    case SweepSuite::Jacobson: sweep_jacobson(summary, options); break;
    case SweepSuite::CartanVsSeries: sweep_cartan(summary, options); break;
  }
  return summary;
}

}  // namespace lieforge
