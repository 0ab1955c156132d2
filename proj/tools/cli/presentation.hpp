#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lieforge/lie_algebra.hpp"

namespace lieforge::cli {

struct ParseOptions {
  bool check_jacobi = true;
};

/// Reads the line-oriented presentation format:
///
///   dim 3
///   basis e h f
///   [h,e] = 2*e      # unlisted brackets are zero; [e,h] is derived
///
/// Errors carry "line L, column C": PARSE_ERROR, UNKNOWN_BASIS_NAME,
/// INCONSISTENT_ANTISYMMETRY, and JACOBI_VIOLATION (naming every failing
/// triple) unless check_jacobi is off.
LieAlgebra parse_presentation(std::string_view text, const ParseOptions& options = {});

/// Canonical text: one relation per nonzero [e_i, e_j] with i < j.
std::string serialize_presentation(const LieAlgebra& L);

/// An element written in basis names, e.g. "2*e - 1/2*f" or "0".
Vector parse_element(const LieAlgebra& L, std::string_view text);
std::string format_element(const LieAlgebra& L, const Vector& v);

}  // namespace lieforge::cli
