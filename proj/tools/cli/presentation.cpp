#include "presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "lieforge/error.hpp"

namespace lieforge::cli {

namespace {

enum class Tok { Name, Int, LBracket, RBracket, Comma, Equals, Plus, Minus, Star, Slash, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

class Lexer {
 public:
  Lexer(std::string_view line, std::size_t line_no) : line_no_(line_no) {
    std::size_t i = 0;
    while (i < line.size()) {
      const char ch = line[i];
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++i;
        continue;
      }
      const std::size_t col = i + 1;
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t j = i;
        while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) ++j;
        tokens_.push_back({Tok::Name, std::string(line.substr(i, j - i)), col});
        i = j;
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::size_t j = i;
        while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
        tokens_.push_back({Tok::Int, std::string(line.substr(i, j - i)), col});
        i = j;
      } else {
        Tok kind;
        switch (ch) {
          case '[': kind = Tok::LBracket; break;
          case ']': kind = Tok::RBracket; break;
          case ',': kind = Tok::Comma; break;
          case '=': kind = Tok::Equals; break;
          case '+': kind = Tok::Plus; break;
          case '-': kind = Tok::Minus; break;
          case '*': kind = Tok::Star; break;
          case '/': kind = Tok::Slash; break;
          default: fail(col, std::string("unexpected character '") + ch + "'");
        }
        tokens_.push_back({kind, std::string(1, ch), col});
        ++i;
      }
    }
    tokens_.push_back({Tok::End, "", line.size() + 1});
  }

  const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }
  Token next() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }
  Token expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(peek().column, std::string("expected ") + what);
    return next();
  }

  [[noreturn]] void fail(std::size_t column, const std::string& message, ErrorCode code = ErrorCode::ParseError) const {
    throw Error(code, location(column) + ": " + message);
  }
  std::string location(std::size_t column) const {
    return "line " + std::to_string(line_no_) + ", column " + std::to_string(column);
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_no_;
};

using NameIndex = std::map<std::string, std::size_t, std::less<>>;

std::size_t resolve(Lexer& lex, const NameIndex& names) {
  const Token t = lex.expect(Tok::Name, "a basis name");
  const auto it = names.find(t.text);
  if (it == names.end()) lex.fail(t.column, "unknown basis name '" + t.text + "'", ErrorCode::UnknownBasisName);
  return it->second;
}

// expr := "0" | [sign] term (sign term)*,  term := [RATIONAL "*"] NAME
Vector parse_expr(Lexer& lex, const NameIndex& names, std::size_t dim) {
  Vector v(dim);
  if (lex.peek().kind == Tok::Int && lex.peek().text.find_first_not_of('0') == std::string::npos &&
      lex.peek(1).kind == Tok::End) {
    lex.next();
    return v;
  }
  bool first = true;
  while (true) {
    Rational sign = 1;
    if (lex.accept(Tok::Minus))
      sign = -1;
    else if (!lex.accept(Tok::Plus) && !first)
      lex.fail(lex.peek().column, "expected '+' or '-'");
    first = false;
    Rational coefficient = 1;
    if (lex.peek().kind == Tok::Int) {
      const Token num = lex.next();
      std::string literal = num.text;
      if (lex.accept(Tok::Slash)) literal += "/" + lex.expect(Tok::Int, "a positive denominator").text;
      try {
        coefficient = Rational::parse(literal);
      } catch (const Error& e) {
        lex.fail(num.column, e.what());
      }
      lex.expect(Tok::Star, "'*' after a coefficient");
    }
    const std::size_t k = resolve(lex, names);
    v[k] += sign * coefficient;
    if (lex.peek().kind == Tok::End) break;
  }
  return v;
}

NameIndex index_names(const std::vector<std::string>& names) {
  NameIndex index;
  for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], i);
  return index;
}

struct Relation {
  Vector value;
  std::string where;
};

}  // namespace

LieAlgebra parse_presentation(std::string_view text, const ParseOptions& options) {
  std::optional<std::size_t> dim;
  std::vector<std::string> names;
  NameIndex index;
  std::map<std::pair<std::size_t, std::size_t>, Relation> relations;
  bool have_basis = false;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Lexer lex(line, line_no);
    if (lex.peek().kind == Tok::End) continue;

    if (!dim) {
      const Token kw = lex.expect(Tok::Name, "'dim'");
      if (kw.text != "dim") lex.fail(kw.column, "expected 'dim'");
      const Token n = lex.expect(Tok::Int, "the dimension");
      lex.expect(Tok::End, "end of line after the dimension");
      dim = std::stoul(n.text);
      continue;
    }
    if (!have_basis) {
      const Token kw = lex.expect(Tok::Name, "'basis'");
      if (kw.text != "basis") lex.fail(kw.column, "expected 'basis'");
      while (lex.peek().kind == Tok::Name) {
        const Token name = lex.next();
        if (index.count(name.text)) lex.fail(name.column, "duplicate basis name '" + name.text + "'");
        index.emplace(name.text, names.size());
        names.push_back(name.text);
      }
      lex.expect(Tok::End, "a basis name");
      if (names.size() != *dim)
        lex.fail(1, "basis lists " + std::to_string(names.size()) + " names but dim is " + std::to_string(*dim));
      have_basis = true;
      continue;
    }

    const std::size_t column = lex.peek().column;
    lex.expect(Tok::LBracket, "'[' starting a relation");
    const std::size_t i = resolve(lex, index);
    lex.expect(Tok::Comma, "','");
    const std::size_t j = resolve(lex, index);
    lex.expect(Tok::RBracket, "']'");
    lex.expect(Tok::Equals, "'='");
    Vector value = parse_expr(lex, index, *dim);
    const std::string where = lex.location(column);
    if (i == j && !is_zero(value))
      throw Error(ErrorCode::InconsistentAntisymmetry, where + ": [" + names[i] + "," + names[i] + "] must be 0");
    if (const auto it = relations.find({i, j}); it != relations.end()) {
      if (it->second.value != value) lex.fail(column, "relation repeats " + it->second.where + " with another value");
      continue;
    }
    if (const auto it = relations.find({j, i}); it != relations.end() && it->second.value != scale(-1, value))
      throw Error(ErrorCode::InconsistentAntisymmetry, where + ": [" + names[i] + "," + names[j] +
                                                           "] is not the negative of [" + names[j] + "," + names[i] +
                                                           "] at " + it->second.where);
    relations.emplace(std::make_pair(i, j), Relation{std::move(value), where});
  }
  if (!dim) throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ", column 1: missing 'dim' line");
  if (!have_basis)
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ", column 1: missing 'basis' line");

  StructureConstants c(*dim);
  for (const auto& [pair, rel] : relations) c.set_bracket(pair.first, pair.second, rel.value);
  LieAlgebra L(names, std::move(c));

  if (options.check_jacobi) {
    const ValidationReport report = validate(L);
    if (!report.jacobi.empty()) {
      std::ostringstream os;
      os << "Jacobi identity fails for";
      for (const auto& v : report.jacobi)
        os << " (" << names[v.i] << "," << names[v.j] << "," << names[v.k] << ")";
      throw Error(ErrorCode::JacobiViolation, os.str());
    }
  }
  return L;
}

std::string format_element(const LieAlgebra& L, const Vector& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const Rational& c = v[k];
    if (c.is_zero()) continue;
    const Rational magnitude = c.sign() < 0 ? -c : c;
    if (out.empty())
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    if (magnitude != Rational(1)) out += magnitude.str() + "*";
    out += L.basis_names()[k];
  }
  return out.empty() ? "0" : out;
}

std::string serialize_presentation(const LieAlgebra& L) {
  std::ostringstream os;
  os << "dim " << L.dim() << "\nbasis";
  for (const auto& name : L.basis_names()) os << ' ' << name;
  os << '\n';
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      const Vector v = bracket(L, L.basis_element(i), L.basis_element(j));
      if (!is_zero(v))
        os << '[' << L.basis_names()[i] << ',' << L.basis_names()[j] << "] = " << format_element(L, v) << '\n';
    }
  return os.str();
}

Vector parse_element(const LieAlgebra& L, std::string_view text) {
  Lexer lex(text, 1);
  if (lex.peek().kind == Tok::End) lex.fail(1, "empty element");
  return parse_expr(lex, index_names(L.basis_names()), L.dim());
}

}  // namespace lieforge::cli
