#pragma once

// Hand-rolled generators for property tests. Each property draws from its own
// fixed-seed engine so failures replay exactly.

#include <cstdint>
#include <random>

#include "lieforge/matrix.hpp"

namespace testgen {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi) { return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  lieforge::Rational rational() {
    const long num = integer(-6, 6);
    const long den = integer(1, 4);
    return lieforge::Rational(num, den);
  }

  lieforge::Vector vector(std::size_t n) {
    lieforge::Vector v(n);
    for (auto& x : v) x = rational();
    return v;
  }

  lieforge::Matrix matrix(std::size_t rows, std::size_t cols, double zero_bias = 0.3) {
    lieforge::Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (static_cast<double>(engine_() % 1000) / 1000.0 >= zero_bias) m(i, j) = rational();
    return m;
  }

  lieforge::Matrix invertible(std::size_t n) {
    for (;;) {
      auto m = matrix(n, n, 0.0);
      if (!lieforge::det(m).is_zero()) return m;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace testgen
