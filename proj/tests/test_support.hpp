#pragma once

#include <random>
#include <string_view>

#include "jlint/laurent.hpp"
#include "jlint/numerics.hpp"
#include "jlint/series.hpp"

namespace jlint::testing {

inline Rational Q(std::string_view s) { return Rational::parse(s); }
inline QuarterLaurent P(std::string_view s) { return QuarterLaurent::parse(s); }

inline SeriesAtOne S(std::initializer_list<std::string_view> coefficients) {
  std::vector<Rational> c;
  for (auto x : coefficients) c.push_back(Q(x));
  return SeriesAtOne(std::move(c));
}

/// Fixed-seed generators for the hand-rolled property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed = 0x5EEDULL) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long magnitude = 20, long max_den = 12) {
    return Rational(Integer(integer(-magnitude, magnitude)), Integer(integer(1, max_den)));
  }
  Rational nonzero_rational(long magnitude = 20, long max_den = 12) {
    Rational r;
    do r = rational(magnitude, max_den);
    while (r.is_zero());
    return r;
  }

  /// Random polynomial; `step` is the exponent grid spacing in quarters.
  QuarterLaurent laurent(int terms, long min_index, long max_index, long step, bool integer_coefficients) {
    QuarterLaurent p;
    for (int i = 0; i < terms; ++i) {
      const long k = integer(min_index / step, max_index / step) * step;
      const Rational c = integer_coefficients ? Rational(integer(-9, 9)) : rational(9, 6);
      p += QuarterLaurent::monomial(c, k);
    }
    return p;
  }
  QuarterLaurent nonzero_laurent(int terms, long min_index, long max_index, long step, bool integer_coefficients) {
    QuarterLaurent p;
    do p = laurent(terms, min_index, max_index, step, integer_coefficients);
    while (p.is_zero());
    return p;
  }

  SeriesAtOne series(std::size_t order, long magnitude = 20, long max_den = 12) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i <= order; ++i) c.push_back(rational(magnitude, max_den));
    return SeriesAtOne(std::move(c));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace jlint::testing
