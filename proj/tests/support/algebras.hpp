#pragma once

#include <cstdint>

#include "lieforge/lie_algebra.hpp"
#include "support/oracle.hpp"

namespace testalg {

/// Library algebra built from a hand-written oracle tensor.
inline lieforge::LieAlgebra from_tensor(const oracle::Tensor& t, std::vector<std::string> names) {
  lieforge::StructureConstants c(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j)
      for (std::size_t k = 0; k < t.size(); ++k) c(i, j, k) = lieforge::Rational(static_cast<long>(t[i][j][k]));
  return lieforge::LieAlgebra(std::move(names), std::move(c));
}

inline lieforge::LieAlgebra sl2() { return from_tensor(oracle::sl2_ehf(), {"e", "h", "f"}); }
inline lieforge::LieAlgebra heisenberg1() { return from_tensor(oracle::heisenberg1(), {"x", "y", "z"}); }
inline lieforge::LieAlgebra nonabelian2() { return from_tensor(oracle::nonabelian2(), {"a", "b"}); }

}  // namespace testalg
