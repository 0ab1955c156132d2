#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lieforge/derivations.hpp"
#include "lieforge/lie_algebra.hpp"

namespace lieforge {

/// Replayable evidence attached to a hypothesis. `rows` holds either the
/// RREF basis of a subspace, the rows of a matrix, or row-major vectorized
/// matrices, depending on `kind`.
struct Witness {
  std::string kind;
  std::vector<Vector> rows;

  static Witness subspace(const Subspace& s);
  static Witness matrix(const Matrix& m);
  static Witness matrices(const std::vector<Matrix>& ms);

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Hypothesis {
  std::string name;
  bool holds = false;
  std::optional<Witness> witness;

  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

struct Conclusion {
  std::string name;
  bool holds = false;

  friend bool operator==(const Conclusion&, const Conclusion&) = default;
};

inline constexpr const char* kFatalMarker = "FATAL";

/// Outcome of checking "hypotheses => conclusion" on one instance. The
/// conclusion is always recomputed from scratch, never inferred from the
/// hypotheses, so implication_ok is a real cross-check.
struct TheoremReport {
  std::string theorem_id;
  std::vector<Hypothesis> hypotheses;
  Conclusion conclusion;
  bool implication_ok = true;
  std::vector<std::string> diagnostics;

  bool hypotheses_hold() const;
  bool vacuous() const { return !hypotheses_hold(); }
  bool fatal() const { return !implication_ok; }

  friend bool operator==(const TheoremReport&, const TheoremReport&) = default;
};

/// Sets implication_ok from the hypotheses and conclusion and appends a
/// FATAL diagnostic when the implication fails.
void finalize(TheoremReport& report);

/// L^n ⊆ [A, L] with A abelian implies L solvable. BAD_N when n <= 1.
TheoremReport check_theorem1(const LieAlgebra& L, const Subspace& A, std::size_t n);

/// Smallest n in [2, max_n] with L^n ⊆ [A, L]. BAD_N when max_n < 2.
std::optional<std::size_t> minimal_witness_n(const LieAlgebra& L, const Subspace& A, std::size_t max_n);

/// Replays the Cartan-criterion argument with S = L^{n-1} as six exact
/// steps; the report's conclusion is "every step holds". NOT_APPLICABLE when
/// the hypotheses of check_theorem1 fail.
TheoremReport audit_theorem1_proof(const LieAlgebra& L, const Subspace& A, std::size_t n);

/// L^n ⊆ sum of d(L) over an abelian space D of derivations implies L
/// solvable.
TheoremReport check_theorem2(const LieAlgebra& L, const DerivationSpace& D, std::size_t n);

/// Reduction of the derivation statement to the abelian-subalgebra one
/// through D ⋉ L, as four steps. NOT_APPLICABLE when check_theorem2 fails its
/// hypotheses.
TheoremReport replay_theorem2_reduction(const LieAlgebra& L, const DerivationSpace& D, std::size_t n);

/// check_theorem2 with D = span{d}.
TheoremReport check_single_derivation(const LieAlgebra& L, const Matrix& d, std::size_t n);

/// Semisimple L and abelian A give a proper [A, L].
TheoremReport check_corollary1(const LieAlgebra& L, const Subspace& A);

/// An invertible derivation forces nilpotency.
TheoremReport check_jacobson(const LieAlgebra& L, const Matrix& d);

/// Both directions of Cartan's solvability criterion against the series
/// computation: the hypothesis is "Killing form vanishes on L x [L,L]"
/// (or its negation for the converse) and the conclusion is solvability (or
/// non-solvability).
TheoremReport check_cartan_criterion(const LieAlgebra& L);

/// Deterministic sample of abelian subalgebras: coordinate lines, the center,
/// each coordinate line plus the center, then centralizer-refined random
/// commuting pairs. At most `budget` distinct nonzero subspaces.
std::vector<Subspace> abelian_candidates(const LieAlgebra& L, std::size_t budget, std::uint64_t seed);

}  // namespace lieforge
