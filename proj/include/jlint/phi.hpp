#pragma once

// The averaged Jones polynomial for the link classes it can be built for
// from a single diagram: trivial links, knots, Brunnian links, and
// geometrically split unions of those.

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "jlint/diagram.hpp"
#include "jlint/jones.hpp"
#include "jlint/laurent.hpp"
#include "jlint/series.hpp"

namespace jlint {

enum class LinkClass { Knot, BrunnianDeclared, Gsl, Asl, General };

std::string_view to_string(LinkClass c) noexcept;

/// Structural class of a diagram (never BrunnianDeclared).
LinkClass classify(const LinkDiagram& d);

/// Phi = num / den with den(1) != 0.
struct PhiResult {
  QuarterLaurent num;
  QuarterLaurent den;
  std::size_t mu = 0;
  LinkClass link_class = LinkClass::Knot;

  /// num / den as a Laurent polynomial when the division is exact.
  std::optional<QuarterLaurent> as_laurent() const;

  /// Closed form: the Laurent part followed by partial fractions in (t+1)
  /// when den is a monomial times a power of t+1 (or of delta), e.g.
  /// "-t^3+3t^2-4t+5+t^{-1}-8(t+1)^{-1}"; otherwise "(num)/(den)".
  std::string to_string() const;

  /// Equality as rational functions (cross-multiplied).
  bool same_function(const PhiResult& other) const;
};

/// Property (i): the trivial or empty link has Phi = 1.
PhiResult phi_trivial(std::size_t mu);

/// Phi(K) = V(K) - 1; the crossing-free unknot gives 1.
/// Throws Error(NotAKnot) unless the diagram has one component.
PhiResult phi_knot(const LinkDiagram& d, ConventionBundle convention);

/// Phi(L) = (-1)^{mu-1} V(L) / delta^{mu-1} - 1, for a diagram the caller
/// asserts is Brunnian. A crossing-free unlink gives 1.
/// Throws Error(NotMultiComponent) when mu < 2.
PhiResult phi_brunnian(const LinkDiagram& d, ConventionBundle convention);

/// Product over split pieces; one-component pieces go through phi_knot,
/// the rest through phi_brunnian.
PhiResult phi_gsl(std::span<const LinkDiagram> pieces, ConventionBundle convention);

SeriesAtOne phi_series(const PhiResult& phi, std::size_t order);

/// (-2)^mu a_{n+mu}. Throws Error(OrderTooLow).
Rational phi_n(const SeriesAtOne& series, std::size_t mu, std::size_t n);

/// Sublink test used to validate declared Brunnian links: every proper
/// nonempty sublink has the Jones polynomial of an unlink. Jones cannot
/// certify triviality in general, so this is a necessary condition only.
bool proper_sublinks_look_trivial(const LinkDiagram& d);

}  // namespace jlint
