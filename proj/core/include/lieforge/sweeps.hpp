#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lieforge/lie_algebra.hpp"

namespace lieforge {

struct NamedAlgebra {
  std::string key;
  LieAlgebra algebra;
};

/// abelian(1..4), heisenberg(1..2), nonabelian2, upper_triangular(2..3),
/// strictly_upper(3..4), sl2 and sl2 + nonabelian2, in that order.
std::vector<NamedAlgebra> base_corpus();

/// Each algebra of `bases` followed by `basis_changes` random isomorphic
/// copies. Keys of the copies are "<key>#bc<i>". One generator seeded with
/// `seed` is consumed in corpus order.
std::vector<NamedAlgebra> with_basis_changes(const std::vector<NamedAlgebra>& bases, std::size_t basis_changes,
                                             std::uint64_t seed);

/// base_corpus() with five basis changes per member.
std::vector<NamedAlgebra> standard_corpus(std::uint64_t seed);

/// sl2 and sl2 + sl2 with five basis changes each.
std::vector<NamedAlgebra> semisimple_corpus(std::uint64_t seed);

enum class SweepSuite { Theorem1, Theorem2, Corollary1, Jacobson, CartanVsSeries };

std::optional<SweepSuite> parse_suite(std::string_view name);
std::string_view to_string(SweepSuite suite);

struct SweepOptions {
  std::size_t candidate_budget = 50;
  std::size_t random_derivations = 20;
  std::size_t invertible_attempts = 200;
  std::size_t extra_basis_changes = 100;
  bool replay_proofs = true;
};

struct SweepSummary {
  SweepSuite suite = SweepSuite::Theorem1;
  std::uint64_t seed = 0;
  std::size_t algebras = 0;
  std::size_t instances = 0;
  std::size_t hypotheses_held = 0;
  std::size_t vacuous = 0;
  std::size_t fatal = 0;
  std::size_t replays = 0;
  std::size_t replay_failures = 0;
  /// Keys of instances whose report had implication_ok = false.
  std::vector<std::string> fatal_instances;
  /// One line per algebra, in corpus order.
  std::vector<std::string> log;

  bool ok() const { return fatal == 0 && replay_failures == 0; }
};

/// Runs one quantified soundness suite; output depends only on (suite,
/// seed, options).
SweepSummary run_sweep(SweepSuite suite, std::uint64_t seed, const SweepOptions& options = {});

}  // namespace lieforge
