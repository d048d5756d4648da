#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "jlint/numerics.hpp"

namespace jlint {

/// Exact Laurent polynomial whose exponents live on the quarter-integer grid:
/// the entry at index k is the coefficient of t^{k/4}. The same type holds
/// polynomials in the bracket variable A (index = power of A), with the
/// substitution A = t^{-1/4} being invert_variable().
///
/// Zero coefficients are never stored.
class QuarterLaurent {
 public:
  using Index = long;
  using Terms = std::map<Index, Rational>;

  QuarterLaurent() = default;
  QuarterLaurent(const Rational& constant);  // NOLINT(google-explicit-constructor)
  QuarterLaurent(long constant) : QuarterLaurent(Rational(constant)) {}  // NOLINT

  static QuarterLaurent monomial(const Rational& coefficient, Index index);
  /// t^{1/2} + t^{-1/2}
  static QuarterLaurent delta();
  /// t + 1
  static QuarterLaurent t_plus_one();

  /// Inverse of to_string(). Accepts ASCII '-' or U+2212, optional '*'
  /// between coefficient and variable, and exponents written as "t^3",
  /// "t^{-1}", "t^{7/2}" or "t^-1".
  static QuarterLaurent parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  Rational coefficient(Index index) const;

  bool is_zero() const { return terms_.empty(); }
  Index min_index() const;
  Index max_index() const;

  bool is_integer_grid() const;
  bool is_half_grid() const;
  bool has_integer_coefficients() const;

  QuarterLaurent operator-() const;
  QuarterLaurent& operator+=(const QuarterLaurent& o);
  QuarterLaurent& operator-=(const QuarterLaurent& o);
  QuarterLaurent& operator*=(const QuarterLaurent& o);

  friend QuarterLaurent operator+(QuarterLaurent a, const QuarterLaurent& b) { return a += b; }
  friend QuarterLaurent operator-(QuarterLaurent a, const QuarterLaurent& b) { return a -= b; }
  friend QuarterLaurent operator*(const QuarterLaurent& a, const QuarterLaurent& b);
  friend bool operator==(const QuarterLaurent& a, const QuarterLaurent& b) = default;

  /// Multiplies by t^{shift/4}.
  QuarterLaurent shifted(Index shift) const;
  QuarterLaurent scaled(const Rational& factor) const;

  /// t -> 1/t, i.e. index k -> -k.
  QuarterLaurent invert_variable() const;

  /// Sum of coefficients.
  Rational evaluate_at_one() const;
  /// Value at t = -1; only defined on the integer grid.
  Rational evaluate_at_minus_one() const;

  /// Descending powers, e.g. "-t^4+t^3+t-1", "t^{7/2}", "(3/4)t^{-1}".
  std::string to_string() const;

 private:
  explicit QuarterLaurent(Terms terms) : terms_(std::move(terms)) {}
  void add_term(Index index, const Rational& c);

  Terms terms_;
};

QuarterLaurent pow(const QuarterLaurent& base, unsigned long exponent);

/// Exact quotient q with q * divisor == dividend, or nullopt when the
/// division leaves a remainder. Throws Error(DivisionByZero) for divisor 0.
std::optional<QuarterLaurent> div_exact(const QuarterLaurent& dividend, const QuarterLaurent& divisor);

/// Exponent k/4 rendered in lowest terms: "3", "-1", "7/2", "1/4".
std::string exponent_string(QuarterLaurent::Index index);

}  // namespace jlint
