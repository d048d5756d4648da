#pragma once

// Arbitrary-precision integers and canonical rationals, plus the small
// number-theoretic toolkit (binomials, p-adic valuations) the rest of the
// library is built on. Nothing here ever rounds.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace jlint {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive
/// denominator, so that equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);

  /// Parses "p/q" or "p" (optional leading sign, decimal digits only).
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "p/q" with "/q" omitted when q = 1.
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Rational power with integer exponent; negative exponents invert.
Rational pow(const Rational& base, long exponent);

/// p-adic valuation, with a distinguished infinity for the valuation of 0.
/// Infinity compares greater than every finite value.
class Valuation {
 public:
  explicit Valuation(long value) : value_(value), infinite_(false) {}
  static Valuation infinity() { return Valuation(); }

  bool is_infinite() const { return infinite_; }
  /// Finite value; throws std::logic_error on infinity.
  long value() const;

  bool at_least(long bound) const { return infinite_ || value_ >= bound; }

  /// Decimal value, or "inf".
  std::string to_string() const;

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);

  /// Valuations add under multiplication.
  friend Valuation operator+(const Valuation& a, const Valuation& b);

 private:
  Valuation() : value_(0), infinite_(true) {}
  long value_;
  bool infinite_;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

/// m(m-1)...(m-n+1) / n!, i.e. the binomial coefficient C(m, n) extended to
/// any integer m. The quotient is always exact.
Integer falling_factorial_div(const Integer& m, unsigned long n);

/// alpha(alpha-1)...(alpha-k+1) / k!
Rational generalized_binomial(const Rational& alpha, unsigned long k);

/// Trial-division primality, intended for the small primes used here.
bool is_small_prime(long p);

/// Largest e with p^e | x (negative when p divides the denominator).
/// Throws Error(NotPrime) when p is not prime.
Valuation padic_valuation(const Rational& x, long p);

/// True iff x is an integer and v_p(x) >= e. For e <= 0 this is just
/// integrality.
bool in_p_power_lattice(const Rational& x, long p, long e);

}  // namespace jlint
