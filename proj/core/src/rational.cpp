#include "linfty/rational.hpp"

#include <cctype>

#include "linfty/errors.hpp"

namespace linfty {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Rational: return "E_RATIONAL";
    case ErrorCode::Parity: return "E_PARITY";
    case ErrorCode::Shape: return "E_SHAPE";
    case ErrorCode::Space: return "E_SPACE";
    case ErrorCode::Precondition: return "E_PRECONDITION";
    case ErrorCode::Truncation: return "E_TRUNCATION";
    case ErrorCode::Size: return "E_SIZE";
    case ErrorCode::Input: return "E_INPUT";
    case ErrorCode::NotNilpotent: return "E_NOT_NILPOTENT";
  }
  return "E_UNKNOWN";
}

Rational::Rational(long n, long d) {
  require(d != 0, ErrorCode::Rational, "zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  require(!o.is_zero(), ErrorCode::Rational, "division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    fail(ErrorCode::Rational, "malformed rational '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0) fail(ErrorCode::Rational, "zero denominator in '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(q);
}

Rational factorial(int n) {
  mpz_class f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return Rational(mpq_class(f));
}

}  // namespace linfty
