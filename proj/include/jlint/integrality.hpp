#pragma once

// Divisibility checkers for the averaged Jones series, and the algebra of
// the double crossing change.
//
// Checkers report mathematical violations through their return values and
// only throw for malformed input (for instance a series that is too short).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "jlint/numerics.hpp"
#include "jlint/phi.hpp"
#include "jlint/series.hpp"

namespace jlint {

/// A coefficient claim of the form "a = 0" or "scale * a in p^e Z".
struct CoefficientBound {
  enum class Kind { Zero, Lattice };
  Kind kind = Kind::Lattice;
  Rational scale = 1;
  long prime = 3;
  long exponent = 0;
  std::string description;

  bool holds(const Rational& a) const;
};

struct ReportEntry {
  std::size_t i = 0;
  Rational a;
  Valuation v2 = Valuation::infinity();
  Valuation v3 = Valuation::infinity();
  CoefficientBound bound;
  bool pass = true;
  std::optional<std::string> flag;
};

enum class Verdict { Pass, Fail, Flagged };
std::string_view to_string(Verdict v) noexcept;

struct ValuationReport {
  std::string claim;
  std::vector<ReportEntry> entries;
  Verdict verdict = Verdict::Pass;
  std::vector<std::string> anomalies;

  /// {"claim", "entries": [{"i","a","v2","v3","bound","pass","flag"}], "verdict"}
  nlohmann::json to_json() const;
};

/// a_0 = ... = a_mu = 0. Throws Error(OrderTooLow) if order < mu.
bool check_eq1_vanishing(const SeriesAtOne& series, std::size_t mu);

/// a_0 .. a_n all integers (n defaults to the series order).
bool check_gsl_integrality(const SeriesAtOne& series, std::optional<std::size_t> n = std::nullopt);

/// Iterated Cauchy product. Throws std::invalid_argument for an empty list.
SeriesAtOne convolve_coefficients(std::span<const SeriesAtOne> factors);

/// Valuation ranges for a split union of mu nontrivial knots:
///   a_i = 0                 for i < 2mu
///   a_i in 3^mu Z           for 2mu <= i <= 3mu  (i = 3mu flagged "boundary-probe")
///   a_i in 3^{4mu-i} Z      for 3mu < i <= 4mu
///   a_i in Z                beyond, up to the series order.
/// Throws Error(OrderTooLow) if order < 4mu.
ValuationReport check_prop1(const SeriesAtOne& series, std::size_t mu);

/// 2^{n-2} a_n in Z for n = 0..n_max (defaults to the series order).
ValuationReport check_prop2(const SeriesAtOne& series, std::optional<std::size_t> n_max = std::nullopt);

struct Conjecture41Result {
  Rational value;  // n! phi_n
  bool in_6z = false;
};

/// n! * phi_n and whether it lies in 6Z. Throws Error(OrderTooLow).
Conjecture41Result check_conjecture41(const SeriesAtOne& series, std::size_t mu, std::size_t n);

/// (t+1)(F - G) == (t^2 - t)(H - K), coefficientwise up to `order`, with
/// F = Phi(L_{+-}), G = Phi(L_{-+}), H = Phi(L_{0+}), K = Phi(L_{+0}).
bool double_crossing_identity(const SeriesAtOne& f, const SeriesAtOne& g, const SeriesAtOne& h,
                              const SeriesAtOne& k, std::size_t order);
/// Same identity as an exact equality of rational functions.
bool double_crossing_identity(const PhiResult& f, const PhiResult& g, const PhiResult& h, const PhiResult& k);

/// a_n(F) = a_n(G) + (a_{n-1}(G) - a_{n-1}(F))/2 + (a_{n-1}(H) - a_{n-1}(K))/2
///        + (a_{n-2}(H) - a_{n-2}(K))/2.
/// Uses f[0..n-1], g[0..n], h and k [0..n-1]; negative indices read as 0.
Rational recurrence_step(std::span<const Rational> f, std::span<const Rational> g, std::span<const Rational> h,
                         std::span<const Rational> k, std::size_t n);

/// The unique F satisfying the identity with G, H, K, built by iterating
/// recurrence_step from n = 0.
SeriesAtOne solve_double_crossing(const SeriesAtOne& g, const SeriesAtOne& h, const SeriesAtOne& k);

}  // namespace jlint
