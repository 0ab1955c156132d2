#pragma once

#include <cstdint>
#include <random>

#include "lieforge/matrix.hpp"

namespace lieforge {

/// Seeded generator for sampling instances. std::mt19937_64's output
/// sequence is fixed by the standard; integers are derived from it without
/// std::uniform_int_distribution so streams are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  long small_int(long lo, long hi);
  Vector small_vector(std::size_t n, long lo, long hi);

 private:
  std::mt19937_64 engine_;
};

/// Integer matrix with entries in [-2, 2] and nonzero determinant.
Matrix random_invertible_matrix(std::size_t n, Rng& rng);

}  // namespace lieforge
