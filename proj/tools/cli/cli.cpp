#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lieforge/construct.hpp"
#include "lieforge/derivations.hpp"
#include "lieforge/error.hpp"
#include "lieforge/sweeps.hpp"
#include "lieforge/theorems.hpp"
#include "presentation.hpp"
#include "report_format.hpp"

namespace lieforge::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 7;

struct Options {
  std::string command;
  std::string file;
  std::string catalog_text;
  std::string format = "human";
  bool strict = false;
  bool skip_jacobi = false;
  std::string subalg;
  std::string derivations;
  std::string derivation;
  std::string out_file;
  std::string suite;
  std::size_t n = 2;
  std::optional<std::uint64_t> seed;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_items(std::string_view s) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto semi = std::min(s.find(';', start), s.size());
    if (auto item = trim(s.substr(start, semi - start)); !item.empty()) items.push_back(std::move(item));
    start = semi + 1;
  }
  return items;
}

std::string describe(const Subspace& s) {
  std::ostringstream os;
  os << "dim " << s.dim() << ", basis " << Witness::subspace(s).rows.size() << " row(s): " << s.basis_matrix();
  return os.str();
}

ordered_json to_json(const Vector& v) {
  ordered_json j = ordered_json::array();
  for (const auto& x : v) j.push_back(x.fraction_str());
  return j;
}

ordered_json to_json(const Matrix& m) {
  ordered_json j = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row(i)));
  return j;
}

ordered_json to_json(const Subspace& s) {
  ordered_json j = ordered_json::array();
  for (const auto& b : s.basis()) j.push_back(to_json(b));
  return j;
}

ordered_json dims_json(const std::vector<Subspace>& chain) {
  ordered_json j = ordered_json::array();
  for (const auto& s : chain) j.push_back(s.dim());
  return j;
}

std::string dims_text(const std::vector<Subspace>& chain) {
  std::string out;
  for (const auto& s : chain) out += (out.empty() ? "" : " ") + std::to_string(s.dim());
  return out;
}

// Matrix literal "[[1,0],[0,1/2]]".
Matrix parse_matrix_literal(std::string_view text, std::size_t n) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto bad = [&]() -> Error { return Error(ErrorCode::ParseError, "bad matrix literal '" + std::string(text) + "'"); };
  if (s.size() < 4 || s.front() != '[' || s.back() != ']') throw bad();
  std::vector<Vector> rows;
  std::size_t pos = 1;
  while (pos < s.size() - 1) {
    if (s[pos] != '[') throw bad();
    const auto close = s.find(']', pos);
    if (close == std::string::npos) throw bad();
    Vector row;
    std::string_view body(s.data() + pos + 1, close - pos - 1);
    std::size_t start = 0;
    while (start <= body.size()) {
      const auto comma = std::min(body.find(',', start), body.size());
      row.push_back(Rational::parse(body.substr(start, comma - start)));
      start = comma + 1;
    }
    rows.push_back(std::move(row));
    pos = close + 1;
    if (pos < s.size() - 1) {
      if (s[pos] != ',') throw bad();
      ++pos;
    }
  }
  if (rows.size() != n) throw Error(ErrorCode::DimensionMismatch, "matrix must have dim(L) rows");
  return Matrix::from_rows(rows, n);
}

std::vector<Matrix> parse_derivation_item(const LieAlgebra& L, const std::string& item) {
  const std::size_t n = L.dim();
  if (item == "der-basis") return derivation_algebra(L).basis();
  if (item == "der-center") return derivation_center(L).basis();
  if (item == "inner") return inner_derivations(L).basis();
  if (item == "0" || item == "zero") return {Matrix(n, n)};
  if (item.rfind("ad:", 0) == 0) return {ad_matrix(L, parse_element(L, item.substr(3)))};
  if (item.rfind("ad(", 0) == 0 && item.back() == ')')
    return {ad_matrix(L, parse_element(L, item.substr(3, item.size() - 4)))};
  if (item.rfind("diag(", 0) == 0 && item.back() == ')') {
    Vector entries;
    std::string_view body(item.data() + 5, item.size() - 6);
    std::size_t start = 0;
    while (start <= body.size()) {
      const auto comma = std::min(body.find(',', start), body.size());
      entries.push_back(Rational::parse(trim(body.substr(start, comma - start))));
      start = comma + 1;
    }
    if (entries.size() != n) throw Error(ErrorCode::DimensionMismatch, "diag needs dim(L) entries");
    return {Matrix::diagonal(entries)};
  }
  if (!item.empty() && item.front() == '[') return {parse_matrix_literal(item, n)};
  throw Error(ErrorCode::ParseError, "unrecognized derivation '" + item + "'");
}

std::vector<Matrix> parse_derivations(const LieAlgebra& L, const std::string& text) {
  std::vector<Matrix> out;
  for (const auto& item : split_items(text)) {
    auto ms = parse_derivation_item(L, item);
    out.insert(out.end(), ms.begin(), ms.end());
  }
  return out;
}

Matrix parse_single_derivation(const LieAlgebra& L, const std::string& text) {
  const auto items = split_items(text);
  if (items.size() != 1) throw Error(ErrorCode::ParseError, "--derivation takes exactly one matrix");
  auto ms = parse_derivation_item(L, items.front());
  if (ms.size() != 1) throw Error(ErrorCode::ParseError, "--derivation takes exactly one matrix");
  return ms.front();
}

Subspace parse_subalgebra(const LieAlgebra& L, const std::string& text) {
  std::vector<Vector> vectors;
  for (const auto& item : split_items(text)) vectors.push_back(parse_element(L, item));
  return Subspace::span(vectors, L.dim());
}

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("LIEFORGE_SEED")) {
    std::uint64_t value = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      throw Error(ErrorCode::BadParams, "LIEFORGE_SEED is not an unsigned integer");
    return value;
  }
  return kDefaultSeed;
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err)
      : o_(o), out_(out), err_(err), format_(o.format == "json" ? Format::Json : Format::Human) {}

  int execute(const LieAlgebra& L) {
    const auto& c = o_.command;
    if (c == "validate") return validate_cmd(L);
    if (c == "series") return series_cmd(L);
    if (c == "solvable") return solvable_cmd(L);
    if (c == "nilpotent") return nilpotent_cmd(L);
    if (c == "semisimple") return semisimple_cmd(L);
    if (c == "killing") return killing_cmd(L);
    if (c == "der") return der_cmd(L);
    if (c == "semidirect") return semidirect_cmd(L);
    if (c == "theorem1") return report(check_theorem1(L, parse_subalgebra(L, o_.subalg), o_.n));
    if (c == "theorem2")
      return report(check_theorem2(L, DerivationSpace(L.dim(), parse_derivations(L, o_.derivations)), o_.n));
    if (c == "single-d") return report(check_single_derivation(L, parse_single_derivation(L, o_.derivation), o_.n));
    if (c == "corollary1") return report(check_corollary1(L, parse_subalgebra(L, o_.subalg)));
    if (c == "jacobson") return report(check_jacobson(L, parse_single_derivation(L, o_.derivation)));
    if (c == "audit1") return replay([&] { return audit_theorem1_proof(L, parse_subalgebra(L, o_.subalg), o_.n); });
    if (c == "audit2")
      return replay([&] {
        return replay_theorem2_reduction(L, DerivationSpace(L.dim(), parse_derivations(L, o_.derivations)), o_.n);
      });
    err_ << "unknown command '" << c << "'\n";
    return kExitInput;
  }

  int sweep() {
    const auto suite = parse_suite(o_.suite);
    if (!suite) {
      err_ << "unknown suite '" << o_.suite << "'\n";
      return kExitInput;
    }
    const SweepSummary summary = run_sweep(*suite, resolve_seed(o_));
    out_ << serialize_sweep(summary, format_);
    if (!summary.ok()) return kExitFatal;
    if (o_.strict && summary.vacuous > 0) return kExitVacuous;
    return kExitOk;
  }

 private:
  void emit(const std::string& human, const ordered_json& json) {
    if (format_ == Format::Json)
      out_ << json.dump(2) << '\n';
    else
      out_ << human;
  }

  int report(const TheoremReport& r) {
    out_ << serialize_report(r, format_);
    if (r.fatal()) {
      err_ << kFatalMarker << ": " << r.theorem_id << " implication failed\n";
      return kExitFatal;
    }
    if (o_.strict && r.vacuous()) return kExitVacuous;
    return kExitOk;
  }

  template <typename F>
  int replay(F&& f) {
    try {
      return report(f());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotApplicable) throw;
      emit(std::string(e.what()) + "\n", ordered_json{{"command", o_.command}, {"applicable", false}, {"reason", e.what()}});
      return o_.strict ? kExitVacuous : kExitOk;
    }
  }

  int validate_cmd(const LieAlgebra& L) {
    const ValidationReport v = validate(L);
    const auto& names = L.basis_names();
    std::ostringstream os;
    ordered_json j{{"command", "validate"}, {"valid", v.ok()}};
    j["antisymmetry_violations"] = ordered_json::array();
    j["jacobi_violations"] = ordered_json::array();
    os << "valid: " << (v.ok() ? "true" : "false") << '\n';
    for (const auto& a : v.antisymmetry) {
      os << "  antisymmetry violated at [" << names[a.i] << "," << names[a.j] << "]\n";
      j["antisymmetry_violations"].push_back({names[a.i], names[a.j]});
    }
    for (const auto& t : v.jacobi) {
      os << "  Jacobi residual at (" << names[t.i] << "," << names[t.j] << "," << names[t.k]
         << "): " << format_element(L, t.residual) << '\n';
      j["jacobi_violations"].push_back({{"triple", {names[t.i], names[t.j], names[t.k]}}, {"residual", to_json(t.residual)}});
    }
    emit(os.str(), j);
    if (!v.ok()) {
      err_ << "invalid Lie algebra: " << v.antisymmetry.size() << " antisymmetry and " << v.jacobi.size()
           << " Jacobi violation(s)\n";
      return kExitInput;
    }
    return kExitOk;
  }

  int series_cmd(const LieAlgebra& L) {
    const auto lower = lower_central_series(L);
    const auto derived = derived_series(L);
    std::ostringstream os;
    os << "lower central series (L^1 = L), stops at the first repeated term:\n";
    for (std::size_t k = 0; k < lower.size(); ++k) os << "  L^" << k + 1 << ": " << describe(lower[k]) << '\n';
    os << "derived series (L^(0) = L), stops at the first repeated term:\n";
    for (std::size_t k = 0; k < derived.size(); ++k) os << "  L^(" << k << "): " << describe(derived[k]) << '\n';
    ordered_json j{{"command", "series"}};
    j["lower_central"] = ordered_json::array();
    for (const auto& s : lower) j["lower_central"].push_back(to_json(s));
    j["derived"] = ordered_json::array();
    for (const auto& s : derived) j["derived"].push_back(to_json(s));
    emit(os.str(), j);
    return kExitOk;
  }

  int solvable_cmd(const LieAlgebra& L) {
    const auto derived = derived_series(L);
    const bool solvable = derived.back().is_zero();
    std::ostringstream os;
    os << "solvable: " << (solvable ? "true" : "false");
    if (solvable)
      os << " (derived series lengths " << derived.size() - 1 << ")\n";
    else
      os << " (derived series stabilizes at dim " << derived.back().dim() << ")\n";
    os << "derived series dims: " << dims_text(derived) << '\n';
    emit(os.str(), {{"command", "solvable"}, {"solvable", solvable}, {"derived_series_dims", dims_json(derived)}});
    return kExitOk;
  }

  int nilpotent_cmd(const LieAlgebra& L) {
    const auto lower = lower_central_series(L);
    const bool nilpotent = lower.back().is_zero();
    std::ostringstream os;
    os << "nilpotent: " << (nilpotent ? "true" : "false");
    if (nilpotent)
      os << " (nilpotency class " << lower.size() - 1 << ")\n";
    else
      os << " (lower central series stabilizes at dim " << lower.back().dim() << ")\n";
    os << "lower central series dims: " << dims_text(lower) << '\n';
    emit(os.str(), {{"command", "nilpotent"}, {"nilpotent", nilpotent}, {"lower_central_series_dims", dims_json(lower)}});
    return kExitOk;
  }

  int semisimple_cmd(const LieAlgebra& L) {
    const Rational d = det(killing_matrix(L));
    std::ostringstream os;
    os << "semisimple: " << (d.is_zero() ? "false" : "true") << " (det Killing = " << d << ")\n";
    emit(os.str(), {{"command", "semisimple"}, {"semisimple", !d.is_zero()}, {"killing_det", d.fraction_str()}});
    return kExitOk;
  }

  int killing_cmd(const LieAlgebra& L) {
    const Matrix k = killing_matrix(L);
    const Rational d = det(k);
    std::ostringstream os;
    os << "Killing matrix (basis";
    for (const auto& name : L.basis_names()) os << ' ' << name;
    os << "): " << k << "\ndet = " << d << '\n';
    emit(os.str(), {{"command", "killing"}, {"basis", L.basis_names()}, {"matrix", to_json(k)}, {"det", d.fraction_str()}});
    return kExitOk;
  }

  int der_cmd(const LieAlgebra& L) {
    const DerivationSpace der = derivation_algebra(L);
    const DerivationSpace inner = inner_derivations(L);
    std::ostringstream os;
    os << "dim Der(L) = " << der.dim() << '\n';
    os << "dim inner derivations = " << inner.dim() << '\n';
    os << "basis (matrix columns are images of basis elements; vectorization is row-major):\n";
    ordered_json j{{"command", "der"}, {"dim", der.dim()}, {"inner_dim", inner.dim()}, {"vectorization", "row-major"}};
    j["basis"] = ordered_json::array();
    for (std::size_t b = 0; b < der.dim(); ++b) {
      os << "  d" << b + 1 << " = " << der.basis()[b] << '\n';
      j["basis"].push_back(to_json(der.basis()[b]));
    }
    emit(os.str(), j);
    return kExitOk;
  }

  int semidirect_cmd(const LieAlgebra& L) {
    const DerivationSpace D(L.dim(), parse_derivations(L, o_.derivations));
    for (const auto& d : D.basis())
      if (!is_derivation(L, d)) throw Error(ErrorCode::BadParams, "--derivations contains a non-derivation");
    const auto [hat, layout] = semidirect(L, D);
    std::ostringstream text;
    text << "# semidirect product D x| L: D block (" << layout.d_dim << ") first, then L block (" << layout.l_dim
         << ")\n"
         << serialize_presentation(hat);
    if (!o_.out_file.empty()) {
      std::ofstream f(o_.out_file);
      if (!f) throw Error(ErrorCode::BadParams, "cannot write '" + o_.out_file + "'");
      f << text.str();
      emit("wrote " + o_.out_file + " (dim " + std::to_string(hat.dim()) + ")\n",
           {{"command", "semidirect"}, {"out", o_.out_file}, {"dim", hat.dim()}, {"d_dim", layout.d_dim},
            {"l_dim", layout.l_dim}});
    } else {
      emit(text.str(), {{"command", "semidirect"}, {"presentation", serialize_presentation(hat)},
                        {"d_dim", layout.d_dim}, {"l_dim", layout.l_dim}});
    }
    return kExitOk;
  }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
  Format format_;
};

LieAlgebra load_algebra(const Options& o) {
  if (!o.file.empty() && !o.catalog_text.empty())
    throw Error(ErrorCode::BadParams, "pass either --file or --catalog, not both");
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw Error(ErrorCode::BadParams, "cannot read '" + o.file + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_presentation(buffer.str(), ParseOptions{!o.skip_jacobi});
  }
  if (!o.catalog_text.empty()) return catalog_from_string(o.catalog_text);
  throw Error(ErrorCode::BadParams, "no algebra given; pass --file PATH or --catalog NAME[:PARAMS]");
}

int run_impl(const LieAlgebra* injected, const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  Options o;
  CLI::App app{"Exact Lie algebra toolkit over the rationals", "lieforge"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--file", o.file, "Presentation file");
  app.add_option("--catalog", o.catalog_text, "Catalog algebra NAME[:PARAMS], '+' for direct sums");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "json"}));
  app.add_flag("--strict", o.strict, "Exit 1 when a hypothesis fails");
  app.add_flag("--skip-jacobi", o.skip_jacobi, "Do not check the Jacobi identity when parsing --file");

  auto with_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "Series index n > 1"); };
  auto with_subalg = [&](CLI::App* sub) {
    sub->add_option("--subalg", o.subalg, "';'-separated elements spanning A")->required();
  };
  auto with_derivations = [&](CLI::App* sub) {
    sub->add_option("--derivations", o.derivations, "';'-separated matrices, der-basis, der-center, inner, ad:X")
        ->required();
  };
  auto with_derivation = [&](CLI::App* sub) {
    sub->add_option("--derivation", o.derivation, "One matrix: [[..]], diag(..), ad:X or 0")->required();
  };

  app.add_subcommand("validate", "Check antisymmetry and Jacobi");
  app.add_subcommand("series", "Lower central and derived series");
  app.add_subcommand("solvable", "Derived series test");
  app.add_subcommand("nilpotent", "Lower central series test");
  app.add_subcommand("semisimple", "Killing form nondegeneracy");
  app.add_subcommand("killing", "Killing matrix and determinant");
  app.add_subcommand("der", "Derivation algebra");
  auto* t1 = app.add_subcommand("theorem1", "Abelian subalgebra with L^n in [A,L]");
  with_subalg(t1);
  with_n(t1);
  auto* t2 = app.add_subcommand("theorem2", "Abelian derivations with L^n in sum d(L)");
  with_derivations(t2);
  with_n(t2);
  auto* sd = app.add_subcommand("single-d", "One derivation with L^n in d(L)");
  with_derivation(sd);
  with_n(sd);
  with_subalg(app.add_subcommand("corollary1", "Semisimple L gives proper [A,L]"));
  with_derivation(app.add_subcommand("jacobson", "Invertible derivation implies nilpotent"));
  auto* semi = app.add_subcommand("semidirect", "Build D x| L");
  with_derivations(semi);
  semi->add_option("--out", o.out_file, "Write the presentation here");
  auto* a1 = app.add_subcommand("audit1", "Replay the abelian-subalgebra proof");
  with_subalg(a1);
  with_n(a1);
  auto* a2 = app.add_subcommand("audit2", "Replay the semidirect reduction");
  with_derivations(a2);
  with_n(a2);
  auto* sw = app.add_subcommand("sweep", "Quantified soundness suites");
  sw->add_option("--suite", o.suite, "thm1, thm2, cor1, jacobson, cartan-vs-series")->required();
  sw->add_option("--seed", o.seed, "Seed (default: LIEFORGE_SEED, else 7)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitInput;
  }
  o.command = app.get_subcommands().front()->get_name();

  try {
    Runner runner(o, out, err);
    if (o.command == "sweep") return runner.sweep();
    if (injected) return runner.execute(*injected);
    return runner.execute(load_algebra(o));
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run_impl(nullptr, args, out, err);
}

int run_on(const LieAlgebra& L, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run_impl(&L, args, out, err);
}

}  // namespace lieforge::cli
