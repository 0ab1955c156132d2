#include "lieforge/rational.hpp"

#include <cctype>

#include "lieforge/error.hpp"

namespace lieforge {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::NotAnIdeal: return "NOT_AN_IDEAL";
    case ErrorCode::NotClosed: return "NOT_CLOSED";
    case ErrorCode::LayoutMismatch: return "LAYOUT_MISMATCH";
    case ErrorCode::SingularMatrix: return "SINGULAR_MATRIX";
    case ErrorCode::UnknownName: return "UNKNOWN_NAME";
    case ErrorCode::BadParams: return "BAD_PARAMS";
    case ErrorCode::BadN: return "BAD_N";
    case ErrorCode::NotApplicable: return "NOT_APPLICABLE";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::UnknownBasisName: return "UNKNOWN_BASIS_NAME";
    case ErrorCode::InconsistentAntisymmetry: return "INCONSISTENT_ANTISYMMETRY";
    case ErrorCode::JacobiViolation: return "JACOBI_VIOLATION";
  }
  return "UNKNOWN_ERROR";
}

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t start = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) start = 1;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false))
    throw Error(ErrorCode::ParseError, "not a rational literal: '" + std::string(text) + "'");
  std::string num_str(num);
  if (num_str[0] == '+') num_str.erase(0, 1);
  mpz_class p(num_str, 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(p, q));
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero rational");
  value_ /= rhs.value_;
  return *this;
}

namespace {

bool integral(const mpq_class& q) { return mpz_cmp_ui(mpq_denref(q.get_mpq_t()), 1) == 0; }

// Integer operands stay integers, so the numerator can be updated in place.
template <bool Add>
void fused(mpq_class& acc, const mpq_class& a, const mpq_class& b) {
  if (integral(acc) && integral(a) && integral(b)) {
    if constexpr (Add)
      mpz_addmul(mpq_numref(acc.get_mpq_t()), mpq_numref(a.get_mpq_t()), mpq_numref(b.get_mpq_t()));
    else
      mpz_submul(mpq_numref(acc.get_mpq_t()), mpq_numref(a.get_mpq_t()), mpq_numref(b.get_mpq_t()));
    return;
  }
  thread_local mpq_class scratch;
  mpq_mul(scratch.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
  if constexpr (Add)
    mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), scratch.get_mpq_t());
  else
    mpq_sub(acc.get_mpq_t(), acc.get_mpq_t(), scratch.get_mpq_t());
}

}  // namespace

Rational& Rational::add_product(const Rational& a, const Rational& b) {
  fused<true>(value_, a.value_, b.value_);
  return *this;
}

Rational& Rational::sub_product(const Rational& a, const Rational& b) {
  fused<false>(value_, a.value_, b.value_);
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return numerator();
  return numerator() + "/" + denominator();
}

std::string Rational::fraction_str() const { return numerator() + "/" + denominator(); }

}  // namespace lieforge
