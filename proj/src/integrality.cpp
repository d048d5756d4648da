#include "jlint/integrality.hpp"

#include <algorithm>
#include <stdexcept>

#include "jlint/error.hpp"

namespace jlint {

bool CoefficientBound::holds(const Rational& a) const {
  if (kind == Kind::Zero) return a.is_zero();
  return in_p_power_lattice(scale * a, prime, exponent);
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Flagged: return "flagged";
  }
  return "fail";
}

nlohmann::json ValuationReport::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  auto valuation = [](const Valuation& v) -> nlohmann::json {
    if (v.is_infinite()) return "inf";
    return v.value();
  };
  for (const auto& e : entries) {
    rows.push_back({{"i", e.i},
                    {"a", e.a.to_string()},
                    {"v2", valuation(e.v2)},
                    {"v3", valuation(e.v3)},
                    {"bound", e.bound.description},
                    {"pass", e.pass},
                    {"flag", e.flag ? nlohmann::json(*e.flag) : nlohmann::json(nullptr)}});
  }
  return {{"claim", claim}, {"entries", std::move(rows)}, {"verdict", std::string(to_string(verdict))}};
}

namespace {

void require_order(const SeriesAtOne& s, std::size_t needed) {
  if (s.order() < needed)
    throw Error(ErrorCode::OrderTooLow,
                "need coefficients through " + std::to_string(needed) + ", series has order " +
                    std::to_string(s.order()));
}

ReportEntry make_entry(std::size_t i, const Rational& a, CoefficientBound bound) {
  ReportEntry e;
  e.i = i;
  e.a = a;
  e.v2 = padic_valuation(a, 2);
  e.v3 = padic_valuation(a, 3);
  e.pass = bound.holds(a);
  e.bound = std::move(bound);
  return e;
}

CoefficientBound zero_bound() { return {CoefficientBound::Kind::Zero, 1, 3, 0, "a_i = 0"}; }

CoefficientBound lattice(long p, long e, std::string description, Rational scale = 1) {
  return {CoefficientBound::Kind::Lattice, std::move(scale), p, e, std::move(description)};
}

}  // namespace

bool check_eq1_vanishing(const SeriesAtOne& series, std::size_t mu) {
  require_order(series, mu);
  for (std::size_t i = 0; i <= mu; ++i)
    if (!series[i].is_zero()) return false;
  return true;
}

bool check_gsl_integrality(const SeriesAtOne& series, std::optional<std::size_t> n) {
  const auto last = n.value_or(series.order());
  require_order(series, last);
  for (std::size_t i = 0; i <= last; ++i)
    if (!series[i].is_integer()) return false;
  return true;
}

SeriesAtOne convolve_coefficients(std::span<const SeriesAtOne> factors) {
  if (factors.empty()) throw std::invalid_argument("convolve_coefficients needs at least one series");
  SeriesAtOne product = factors.front();
  for (const auto& f : factors.subspan(1)) product = product * f;
  return product;
}

ValuationReport check_prop1(const SeriesAtOne& series, std::size_t mu) {
  require_order(series, 4 * mu);
  ValuationReport report;
  report.claim = "prop1";
  const long m = static_cast<long>(mu);
  const std::string mu_text = std::to_string(mu);
  bool interior_ok = true;
  bool boundary_ok = true;

  for (std::size_t i = 0; i <= series.order(); ++i) {
    const long il = static_cast<long>(i);
    ReportEntry entry;
    if (i < 2 * mu) {
      entry = make_entry(i, series[i], zero_bound());
    } else if (i <= 3 * mu) {
      entry = make_entry(i, series[i], lattice(3, m, "3^" + mu_text + " Z"));
    } else if (i <= 4 * mu) {
      entry = make_entry(i, series[i], lattice(3, 4 * m - il, "3^" + std::to_string(4 * m - il) + " Z"));
    } else {
      entry = make_entry(i, series[i], lattice(3, 0, "Z"));
    }
    if (mu > 0 && i == 3 * mu) {
      entry.flag = "boundary-probe";
      boundary_ok = entry.pass;
      if (!entry.pass)
        report.anomalies.push_back("i=" + std::to_string(i) + ": a_i=" + entry.a.to_string() +
                                   " has v3=" + entry.v3.to_string() + " < " + mu_text);
    } else if (!entry.pass) {
      interior_ok = false;
      report.anomalies.push_back("i=" + std::to_string(i) + ": a_i=" + entry.a.to_string() + " violates " +
                                 entry.bound.description);
    }
    report.entries.push_back(std::move(entry));
  }
  report.verdict = !interior_ok ? Verdict::Fail : (boundary_ok ? Verdict::Pass : Verdict::Flagged);
  return report;
}

ValuationReport check_prop2(const SeriesAtOne& series, std::optional<std::size_t> n_max) {
  const auto last = n_max.value_or(series.order());
  require_order(series, last);
  ValuationReport report;
  report.claim = "prop2";
  for (std::size_t n = 0; n <= last; ++n) {
    const long shift = static_cast<long>(n) - 2;
    auto entry = make_entry(n, series[n], lattice(2, 0, "2^" + std::to_string(shift) + " a_n in Z",
                                                  pow(Rational(2), shift)));
    if (!entry.pass) {
      report.verdict = Verdict::Fail;
      report.anomalies.push_back("n=" + std::to_string(n) + ": 2^" + std::to_string(shift) + " * " +
                                 entry.a.to_string() + " is not an integer");
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

Conjecture41Result check_conjecture41(const SeriesAtOne& series, std::size_t mu, std::size_t n) {
  Integer factorial;
  mpz_fac_ui(factorial.get_mpz_t(), n);
  Conjecture41Result r;
  r.value = Rational(factorial) * phi_n(series, mu, n);
  r.in_6z = in_p_power_lattice(r.value, 2, 1) && in_p_power_lattice(r.value, 3, 1);
  return r;
}

bool double_crossing_identity(const SeriesAtOne& f, const SeriesAtOne& g, const SeriesAtOne& h,
                              const SeriesAtOne& k, std::size_t order) {
  for (const auto* s : {&f, &g, &h, &k}) require_order(*s, order);
  // In s = t - 1: t + 1 = 2 + s and t^2 - t = s + s^2.
  for (std::size_t n = 0; n <= order; ++n) {
    const long i = static_cast<long>(n);
    const Rational lhs = Rational(2) * (f.at(i) - g.at(i)) + (f.at(i - 1) - g.at(i - 1));
    const Rational rhs = (h.at(i - 1) - k.at(i - 1)) + (h.at(i - 2) - k.at(i - 2));
    if (lhs != rhs) return false;
  }
  return true;
}

bool double_crossing_identity(const PhiResult& f, const PhiResult& g, const PhiResult& h, const PhiResult& k) {
  const QuarterLaurent t_plus_one = QuarterLaurent::t_plus_one();
  const QuarterLaurent t2_minus_t = QuarterLaurent::monomial(1, 8) - QuarterLaurent::monomial(1, 4);
  const QuarterLaurent lhs = t_plus_one * (f.num * g.den - g.num * f.den) * h.den * k.den;
  const QuarterLaurent rhs = t2_minus_t * (h.num * k.den - k.num * h.den) * f.den * g.den;
  return lhs == rhs;
}

Rational recurrence_step(std::span<const Rational> f, std::span<const Rational> g, std::span<const Rational> h,
                         std::span<const Rational> k, std::size_t n) {
  auto at = [](std::span<const Rational> s, long i) -> Rational {
    if (i < 0) return 0;
    if (static_cast<std::size_t>(i) >= s.size())
      throw Error(ErrorCode::OrderTooLow, "recurrence needs coefficient " + std::to_string(i));
    return s[static_cast<std::size_t>(i)];
  };
  const long i = static_cast<long>(n);
  const Rational half(Integer(1), Integer(2));
  return at(g, i) + half * (at(g, i - 1) - at(f, i - 1)) + half * (at(h, i - 1) - at(k, i - 1)) +
         half * (at(h, i - 2) - at(k, i - 2));
}

SeriesAtOne solve_double_crossing(const SeriesAtOne& g, const SeriesAtOne& h, const SeriesAtOne& k) {
  const auto order = std::min({g.order(), h.order(), k.order()});
  std::vector<Rational> f;
  f.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n)
    f.push_back(recurrence_step(f, g.coefficients(), h.coefficients(), k.coefficients(), n));
  return SeriesAtOne(std::move(f));
}

}  // namespace jlint
