#pragma once

#include <string>
#include <string_view>

#include "lieforge/sweeps.hpp"
#include "lieforge/theorems.hpp"

namespace lieforge::cli {

enum class Format { Human, Json };

/// JSON keys, in order: theorem_id, hypotheses [{name, holds, witness}],
/// conclusion {name, holds}, implication_ok, diagnostics. Rationals are
/// "p/q" strings. Failed implications carry the FATAL marker in both
/// formats.
std::string serialize_report(const TheoremReport& report, Format format);

/// Inverse of serialize_report(..., Format::Json). PARSE_ERROR on malformed
/// input.
TheoremReport parse_report_json(std::string_view text);

std::string serialize_sweep(const SweepSummary& summary, Format format);

}  // namespace lieforge::cli
