#include "jlint/numerics.hpp"

#include <cctype>

#include "jlint/error.hpp"

namespace jlint {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedLine: return "MALFORMED_LINE";
    case ErrorCode::ArcCount: return "ARC_COUNT";
    case ErrorCode::InconsistentOrientation: return "INCONSISTENT_ORIENTATION";
    case ErrorCode::InvalidComponent: return "INVALID_COMPONENT";
    case ErrorCode::InvalidCrossing: return "INVALID_CROSSING";
    case ErrorCode::UnknownName: return "UNKNOWN_NAME";
    case ErrorCode::CapExceeded: return "CAP_EXCEEDED";
    case ErrorCode::EmptyDiagram: return "EMPTY_DIAGRAM";
    case ErrorCode::CalibrationFailed: return "CALIBRATION_FAILED";
    case ErrorCode::NotAKnot: return "NOT_A_KNOT";
    case ErrorCode::NotMultiComponent: return "NOT_MULTI_COMPONENT";
    case ErrorCode::ClassUnsupported: return "CLASS_UNSUPPORTED";
    case ErrorCode::OrderTooLow: return "ORDER_TOO_LOW";
    case ErrorCode::DenVanishesAtOne: return "DEN_VANISHES_AT_ONE";
    case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::NotPrime: return "NOT_PRIME";
    case ErrorCode::ParseError: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

Rational::Rational(const Integer& num, const Integer& den) : value_(num, den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
  value_ /= o.value_;
  return *this;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(s) + "'");
  Integer v(std::string(s), 10);
  return negative ? Integer(-v) : v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  auto den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) throw Error(ErrorCode::ParseError, "bad denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(text.substr(0, slash)), Integer(std::string(den_text), 10));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) return pow(Rational(1) / base, -exponent);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

long Valuation::value() const {
  if (infinite_) throw std::logic_error("valuation is infinite");
  return value_;
}

std::string Valuation::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  return a.value_ <=> b.value_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.infinite_ || b.infinite_) return Valuation::infinity();
  return Valuation(a.value_ + b.value_);
}

std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.to_string(); }

Integer falling_factorial_div(const Integer& m, unsigned long n) {
  Integer product = 1;
  Integer factorial = 1;
  for (unsigned long i = 0; i < n; ++i) {
    product *= m - i;
    factorial *= i + 1;
  }
  // Any n consecutive integers contain a multiple of every k <= n, hence
  // n! divides their product.
  Integer q;
  mpz_divexact(q.get_mpz_t(), product.get_mpz_t(), factorial.get_mpz_t());
  return q;
}

Rational generalized_binomial(const Rational& alpha, unsigned long k) {
  Rational c = 1;
  for (unsigned long i = 0; i < k; ++i) {
    c *= alpha - Rational(static_cast<long>(i));
    c /= Rational(static_cast<long>(i + 1));
  }
  return c;
}

bool is_small_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

long remove_factor(const Integer& n, long p) {
  Integer rest;
  const Integer prime = p;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

void require_prime(long p) {
  if (!is_small_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
}

}  // namespace

Valuation padic_valuation(const Rational& x, long p) {
  require_prime(p);
  if (x.is_zero()) return Valuation::infinity();
  return Valuation(remove_factor(x.numerator(), p) - remove_factor(x.denominator(), p));
}

bool in_p_power_lattice(const Rational& x, long p, long e) {
  require_prime(p);
  if (!x.is_integer()) return false;
  return padic_valuation(x, p).at_least(e);
}

}  // namespace jlint
