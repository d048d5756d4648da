#include "jlint/phi.hpp"

#include <vector>

#include "jlint/error.hpp"

namespace jlint {

std::string_view to_string(LinkClass c) noexcept {
  switch (c) {
    case LinkClass::Knot: return "KNOT";
    case LinkClass::BrunnianDeclared: return "BRUNNIAN_DECLARED";
    case LinkClass::Gsl: return "GSL";
    case LinkClass::Asl: return "ASL";
    case LinkClass::General: return "GENERAL";
  }
  return "GENERAL";
}

LinkClass classify(const LinkDiagram& d) {
  if (d.component_count() == 1) return LinkClass::Knot;
  if (is_geometrically_split(d)) return LinkClass::Gsl;
  if (is_algebraically_split(d)) return LinkClass::Asl;
  return LinkClass::General;
}

std::optional<QuarterLaurent> PhiResult::as_laurent() const { return div_exact(num, den); }

bool PhiResult::same_function(const PhiResult& other) const { return num * other.den == other.num * den; }

namespace {

PhiResult reduced(PhiResult r) {
  if (auto q = div_exact(r.num, r.den)) {
    r.num = std::move(*q);
    r.den = QuarterLaurent(1);
  }
  return r;
}

std::string render_over_t_plus_one(QuarterLaurent numerator, std::size_t power) {
  // numerator / (t+1)^power = laurent + sum_j r_j (t+1)^{-j}, peeling one
  // factor at a time: N = Q (t+1) + N(-1).
  std::vector<Rational> residues;
  for (std::size_t j = power; j >= 1; --j) {
    const Rational r = numerator.evaluate_at_minus_one();
    auto q = div_exact(numerator - QuarterLaurent(r), QuarterLaurent::t_plus_one());
    numerator = std::move(*q);
    residues.push_back(r);  // coefficient of (t+1)^{-j}
  }
  std::string out = numerator.is_zero() ? "" : numerator.to_string();
  for (std::size_t i = residues.size(); i-- > 0;) {
    const Rational& r = residues[i];
    if (r.is_zero()) continue;
    const std::size_t j = power - i;
    const Rational magnitude = r.sign() < 0 ? -r : r;
    out += r.sign() < 0 ? "-" : (out.empty() ? "" : "+");
    if (magnitude != Rational(1))
      out += magnitude.is_integer() ? magnitude.to_string() : "(" + magnitude.to_string() + ")";
    out += "(t+1)^{-" + std::to_string(j) + "}";
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string PhiResult::to_string() const {
  if (auto q = as_laurent()) return q->to_string();
  // den = c * t^{low/4} * (t+1)^k ?
  const auto low = den.min_index();
  const auto span = den.max_index() - low;
  if (span % 4 == 0) {
    const auto k = static_cast<std::size_t>(span / 4);
    const Rational c = den.coefficient(low);
    const QuarterLaurent normalised = den.shifted(-low).scaled(Rational(1) / c);
    if (normalised == pow(QuarterLaurent::t_plus_one(), k)) {
      const QuarterLaurent n = num.shifted(-low).scaled(Rational(1) / c);
      if (n.is_integer_grid()) return render_over_t_plus_one(n, k);
    }
  }
  return "(" + num.to_string() + ")/(" + den.to_string() + ")";
}

PhiResult phi_trivial(std::size_t mu) {
  return PhiResult{QuarterLaurent(1), QuarterLaurent(1), mu, mu == 1 ? LinkClass::Knot : LinkClass::Gsl};
}

PhiResult phi_knot(const LinkDiagram& d, ConventionBundle convention) {
  if (d.component_count() != 1)
    throw Error(ErrorCode::NotAKnot, "diagram has " + std::to_string(d.component_count()) + " components");
  if (d.is_crossing_free()) return phi_trivial(1);
  return PhiResult{jones_reduced(d, convention) - QuarterLaurent(1), QuarterLaurent(1), 1, LinkClass::Knot};
}

PhiResult phi_brunnian(const LinkDiagram& d, ConventionBundle convention) {
  const auto mu = d.component_count();
  if (mu < 2) throw Error(ErrorCode::NotMultiComponent, "Brunnian formula needs at least two components");
  if (d.is_crossing_free()) return phi_trivial(mu);
  const QuarterLaurent den = pow(QuarterLaurent::delta(), mu - 1);
  QuarterLaurent v = jones_reduced(d, convention);
  if (mu % 2 == 0) v = -v;
  return reduced(PhiResult{v - den, den, mu, LinkClass::BrunnianDeclared});
}

PhiResult phi_gsl(std::span<const LinkDiagram> pieces, ConventionBundle convention) {
  PhiResult product = phi_trivial(0);
  for (const auto& piece : pieces) {
    const PhiResult p =
        piece.component_count() == 1 ? phi_knot(piece, convention) : phi_brunnian(piece, convention);
    product.num *= p.num;
    product.den *= p.den;
    product.mu += p.mu;
  }
  product.link_class = product.mu == 1 ? LinkClass::Knot : LinkClass::Gsl;
  return reduced(std::move(product));
}

SeriesAtOne phi_series(const PhiResult& phi, std::size_t order) { return expand_ratio(phi.num, phi.den, order); }

Rational phi_n(const SeriesAtOne& series, std::size_t mu, std::size_t n) {
  if (n + mu > series.order())
    throw Error(ErrorCode::OrderTooLow, "phi_" + std::to_string(n) + " needs a_" + std::to_string(n + mu) +
                                            " but the series has order " + std::to_string(series.order()));
  return pow(Rational(-2), static_cast<long>(mu)) * series[n + mu];
}

bool proper_sublinks_look_trivial(const LinkDiagram& d) {
  const auto mu = d.component_count();
  if (mu >= 8 * sizeof(unsigned long) - 1) return false;
  for (unsigned long mask = 1; mask + 1 < (1UL << mu); ++mask) {
    std::set<std::size_t> keep;
    for (std::size_t c = 0; c < mu; ++c)
      if ((mask >> c) & 1UL) keep.insert(c);
    // Unlink Jones is symmetric in t, so the convention is irrelevant.
    if (jones_reduced(sublink(d, keep), ConventionBundle{}) != unlink_jones(keep.size())) return false;
  }
  return true;
}

}  // namespace jlint
