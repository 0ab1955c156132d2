#include "report_format.hpp"

#include <sstream>

#include "json.hpp"

#include "lieforge/error.hpp"

namespace lieforge::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json rows_to_json(const std::vector<Vector>& rows) {
  ordered_json out = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json r = ordered_json::array();
    for (const auto& x : row) r.push_back(x.fraction_str());
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Vector> rows_from_json(const ordered_json& j) {
  std::vector<Vector> rows;
  for (const auto& r : j) {
    Vector row;
    for (const auto& x : r) row.push_back(Rational::parse(x.get<std::string>()));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_rows(const std::vector<Vector>& rows) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < rows[i].size(); ++j) os << (j ? ", " : "") << rows[i][j];
    os << ']';
  }
  os << ']';
  return os.str();
}

const char* verdict(const TheoremReport& r) {
  if (r.fatal()) return "FATAL (hypotheses hold but the conclusion fails)";
  if (r.vacuous()) return "ok, vacuous (a hypothesis fails)";
  return "ok (hypotheses hold and the conclusion is verified)";
}

}  // namespace

std::string serialize_report(const TheoremReport& report, Format format) {
  if (format == Format::Json) {
    ordered_json j;
    j["theorem_id"] = report.theorem_id;
    j["hypotheses"] = ordered_json::array();
    for (const auto& h : report.hypotheses) {
      ordered_json entry;
      entry["name"] = h.name;
      entry["holds"] = h.holds;
      if (h.witness) {
        entry["witness"] = ordered_json{{"kind", h.witness->kind}, {"rows", rows_to_json(h.witness->rows)}};
      } else {
        entry["witness"] = nullptr;
      }
      j["hypotheses"].push_back(std::move(entry));
    }
    j["conclusion"] = ordered_json{{"name", report.conclusion.name}, {"holds", report.conclusion.holds}};
    j["implication_ok"] = report.implication_ok;
    j["diagnostics"] = report.diagnostics;
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  os << report.theorem_id << '\n';
  for (const auto& h : report.hypotheses) {
    os << "  " << h.name << ": " << (h.holds ? "true" : "false") << '\n';
    if (h.witness) os << "    witness (" << h.witness->kind << "): " << format_rows(h.witness->rows) << '\n';
  }
  os << "  conclusion: " << report.conclusion.name << ": " << (report.conclusion.holds ? "true" : "false") << '\n';
  os << "  implication: " << verdict(report) << '\n';
  for (const auto& d : report.diagnostics) os << "  - " << d << '\n';
  return os.str();
}

TheoremReport parse_report_json(std::string_view text) {
  try {
    const auto j = ordered_json::parse(text);
    TheoremReport r;
    r.theorem_id = j.at("theorem_id").get<std::string>();
    for (const auto& h : j.at("hypotheses")) {
      Hypothesis hyp{h.at("name").get<std::string>(), h.at("holds").get<bool>(), std::nullopt};
      const auto& w = h.at("witness");
      if (!w.is_null()) hyp.witness = Witness{w.at("kind").get<std::string>(), rows_from_json(w.at("rows"))};
      r.hypotheses.push_back(std::move(hyp));
    }
    r.conclusion = {j.at("conclusion").at("name").get<std::string>(), j.at("conclusion").at("holds").get<bool>()};
    r.implication_ok = j.at("implication_ok").get<bool>();
    r.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
}

std::string serialize_sweep(const SweepSummary& s, Format format) {
  if (format == Format::Json) {
    ordered_json j;
    j["suite"] = std::string(to_string(s.suite));
    j["seed"] = s.seed;
    j["algebras"] = s.algebras;
    j["instances"] = s.instances;
    j["hypotheses_held"] = s.hypotheses_held;
    j["vacuous"] = s.vacuous;
    j["fatal"] = s.fatal;
    j["replays"] = s.replays;
    j["replay_failures"] = s.replay_failures;
    j["fatal_instances"] = s.fatal_instances;
    j["log"] = s.log;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "suite " << to_string(s.suite) << ", seed " << s.seed << '\n';
  for (const auto& line : s.log) os << "  " << line << '\n';
  for (const auto& key : s.fatal_instances) os << "  FATAL: " << key << '\n';
  os << "algebras " << s.algebras << ", instances " << s.instances << ", hypotheses held " << s.hypotheses_held
     << ", vacuous " << s.vacuous << ", fatal " << s.fatal << ", replays " << s.replays << ", replay failures "
     << s.replay_failures << '\n';
  if (s.suite == SweepSuite::CartanVsSeries) {
    const std::size_t agree = s.instances - s.fatal;
    if (agree == s.instances)
      os << "agreement 100% over " << s.instances << " instances\n";
    else
      os << "agreement " << agree << "/" << s.instances << " instances\n";
  }
  return os.str();
}

}  // namespace lieforge::cli
