#include "jlint/series.hpp"

#include <algorithm>

#include "jlint/error.hpp"

namespace jlint {

SeriesAtOne::SeriesAtOne(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw std::invalid_argument("SeriesAtOne needs at least one coefficient");
}

SeriesAtOne SeriesAtOne::zero(std::size_t order) { return SeriesAtOne(std::vector<Rational>(order + 1)); }

SeriesAtOne SeriesAtOne::one(std::size_t order) { return monomial(0, order); }

SeriesAtOne SeriesAtOne::monomial(std::size_t degree, std::size_t order) {
  std::vector<Rational> c(order + 1);
  if (degree <= order) c[degree] = 1;
  return SeriesAtOne(std::move(c));
}

Rational SeriesAtOne::at(long n) const {
  if (n < 0) return 0;
  if (static_cast<std::size_t>(n) > order())
    throw Error(ErrorCode::OrderTooLow,
                "coefficient " + std::to_string(n) + " requested from a series of order " + std::to_string(order()));
  return coefficients_[static_cast<std::size_t>(n)];
}

SeriesAtOne SeriesAtOne::truncated(std::size_t order) const {
  if (order > this->order()) throw Error(ErrorCode::OrderTooLow, "cannot extend a truncated series");
  return SeriesAtOne(std::vector<Rational>(coefficients_.begin(), coefficients_.begin() + order + 1));
}

bool SeriesAtOne::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool SeriesAtOne::all_integer() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(), [](const Rational& r) { return r.is_integer(); });
}

SeriesAtOne SeriesAtOne::operator-() const {
  std::vector<Rational> c;
  c.reserve(coefficients_.size());
  for (const auto& r : coefficients_) c.push_back(-r);
  return SeriesAtOne(std::move(c));
}

SeriesAtOne operator+(const SeriesAtOne& a, const SeriesAtOne& b) {
  const auto n = std::min(a.order(), b.order());
  std::vector<Rational> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = a[i] + b[i];
  return SeriesAtOne(std::move(c));
}

SeriesAtOne operator-(const SeriesAtOne& a, const SeriesAtOne& b) { return a + (-b); }

SeriesAtOne operator*(const SeriesAtOne& a, const SeriesAtOne& b) {
  const auto n = std::min(a.order(), b.order());
  std::vector<Rational> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
  }
  return SeriesAtOne(std::move(c));
}

SeriesAtOne operator/(const SeriesAtOne& a, const SeriesAtOne& b) {
  if (b[0].is_zero()) throw Error(ErrorCode::DenVanishesAtOne, "denominator series has zero constant term");
  const auto n = std::min(a.order(), b.order());
  std::vector<Rational> q(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    Rational acc = a[i];
    for (std::size_t j = 1; j <= i; ++j) acc -= b[j] * q[i - j];
    q[i] = acc / b[0];
  }
  return SeriesAtOne(std::move(q));
}

nlohmann::json SeriesAtOne::to_json() const {
  nlohmann::json coefficients = nlohmann::json::array();
  for (const auto& r : coefficients_) coefficients.push_back(r.to_string());
  return {{"order", order()}, {"coefficients", std::move(coefficients)}};
}

SeriesAtOne SeriesAtOne::from_json(const nlohmann::json& j) {
  std::vector<Rational> c;
  for (const auto& item : j.at("coefficients")) c.push_back(Rational::parse(item.get<std::string>()));
  SeriesAtOne s(std::move(c));
  if (s.order() != j.at("order").get<std::size_t>()) throw Error(ErrorCode::ParseError, "order field mismatch");
  return s;
}

SeriesAtOne expand_power(const Rational& exponent, std::size_t order) {
  std::vector<Rational> c(order + 1);
  for (std::size_t k = 0; k <= order; ++k) c[k] = generalized_binomial(exponent, k);
  return SeriesAtOne(std::move(c));
}

SeriesAtOne expand_laurent(const QuarterLaurent& p, std::size_t order) {
  std::vector<Rational> c(order + 1);
  for (const auto& [index, coefficient] : p.terms()) {
    const auto term = expand_power(Rational(Integer(index), Integer(4)), order);
    for (std::size_t k = 0; k <= order; ++k) c[k] += coefficient * term[k];
  }
  return SeriesAtOne(std::move(c));
}

SeriesAtOne expand_ratio(const QuarterLaurent& num, const QuarterLaurent& den, std::size_t order) {
  if (den.evaluate_at_one().is_zero())
    throw Error(ErrorCode::DenVanishesAtOne, "denominator " + den.to_string() + " vanishes at t = 1");
  return expand_laurent(num, order) / expand_laurent(den, order);
}

Rational coefficient_via_derivative(const QuarterLaurent& p, unsigned long n) {
  Rational derivative = 0;
  for (const auto& [index, coefficient] : p.terms()) {
    const Rational e(Integer(index), Integer(4));
    Rational falling = 1;
    for (unsigned long i = 0; i < n; ++i) falling *= e - Rational(static_cast<long>(i));
    derivative += coefficient * falling;
  }
  Integer factorial;
  mpz_fac_ui(factorial.get_mpz_t(), n);
  return derivative / Rational(factorial);
}

Rational whitehead_closed_form(unsigned long n) {
  if (n <= 2) return 0;
  if (n == 3) return Rational(-3, 2);
  const Rational half_power = pow(Rational(2), static_cast<long>(n - 2));
  const Rational magnitude = (half_power - Rational(1)) / half_power;
  return n % 2 == 0 ? magnitude : -magnitude;
}

}  // namespace jlint
