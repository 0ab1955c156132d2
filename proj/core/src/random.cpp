#include "lieforge/random.hpp"

namespace lieforge {

long Rng::small_int(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

Vector Rng::small_vector(std::size_t n, long lo, long hi) {
  Vector v(n);
  for (auto& x : v) x = small_int(lo, hi);
  return v;
}

Matrix random_invertible_matrix(std::size_t n, Rng& rng) {
  for (;;) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.small_int(-2, 2);
    if (!det(m).is_zero()) return m;
  }
}

}  // namespace lieforge
