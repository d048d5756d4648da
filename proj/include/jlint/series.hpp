#pragma once

// Truncated power series in s = t - 1 with exact rational coefficients.

#include <cstddef>
#include <span>
#include <vector>

#include <json.hpp>

#include "jlint/laurent.hpp"
#include "jlint/numerics.hpp"

namespace jlint {

/// a_0 + a_1 s + ... + a_N s^N, where N = order(). Binary operations
/// truncate to the smaller order.
class SeriesAtOne {
 public:
  /// Requires at least one coefficient.
  explicit SeriesAtOne(std::vector<Rational> coefficients);

  static SeriesAtOne zero(std::size_t order);
  static SeriesAtOne one(std::size_t order);
  /// s^degree truncated at order.
  static SeriesAtOne monomial(std::size_t degree, std::size_t order);

  std::size_t order() const { return coefficients_.size() - 1; }
  const Rational& operator[](std::size_t n) const { return coefficients_.at(n); }
  /// a_n, or 0 for negative n. Throws Error(OrderTooLow) past the order.
  Rational at(long n) const;
  std::span<const Rational> coefficients() const { return coefficients_; }

  SeriesAtOne truncated(std::size_t order) const;
  bool is_zero() const;
  bool all_integer() const;

  SeriesAtOne operator-() const;
  friend SeriesAtOne operator+(const SeriesAtOne& a, const SeriesAtOne& b);
  friend SeriesAtOne operator-(const SeriesAtOne& a, const SeriesAtOne& b);
  /// Truncated Cauchy product.
  friend SeriesAtOne operator*(const SeriesAtOne& a, const SeriesAtOne& b);
  /// Formal quotient; Error(DenVanishesAtOne) when b has zero constant term.
  friend SeriesAtOne operator/(const SeriesAtOne& a, const SeriesAtOne& b);
  friend bool operator==(const SeriesAtOne& a, const SeriesAtOne& b) = default;

  /// {"order": N, "coefficients": ["0", "-3/2", ...]}
  nlohmann::json to_json() const;
  static SeriesAtOne from_json(const nlohmann::json& j);

 private:
  std::vector<Rational> coefficients_;
};

/// Series of (1+s)^exponent: the k-th coefficient is C(exponent, k).
SeriesAtOne expand_power(const Rational& exponent, std::size_t order);

/// Termwise expand_power over the quarter-grid exponents of p.
SeriesAtOne expand_laurent(const QuarterLaurent& p, std::size_t order);

/// Series of num/den. Throws Error(DenVanishesAtOne) when den(1) = 0.
SeriesAtOne expand_ratio(const QuarterLaurent& num, const QuarterLaurent& den, std::size_t order);

/// (1/n!) d^n p/dt^n at t = 1, computed from falling factorials of each
/// exponent. Independent of expand_laurent.
Rational coefficient_via_derivative(const QuarterLaurent& p, unsigned long n);

/// Reference coefficients of the Whitehead link's averaged Jones series:
/// 0 for n <= 2, -3/2 at n = 3, (-1)^n (2^{n-2} - 1) / 2^{n-2} beyond.
Rational whitehead_closed_form(unsigned long n);

}  // namespace jlint
