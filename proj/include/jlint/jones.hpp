#pragma once

// Kauffman bracket state sum and the writhe-normalised Jones polynomial.
//
// Pinned conventions: loop value -A^2 - A^{-2}, <unknot> = 1, writhe factor
// (-A^3)^{-w}, substitution A = t^{-1/4}. The only free choice is whether to
// apply t -> 1/t afterwards, which calibrate() settles against two anchor
// values.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "jlint/diagram.hpp"
#include "jlint/laurent.hpp"

namespace jlint {

struct ConventionBundle {
  bool invert_t = false;

  friend bool operator==(const ConventionBundle&, const ConventionBundle&) = default;
};

struct BracketOptions {
  std::size_t crossing_cap = 24;
  /// Worker threads for the state sum; results do not depend on it.
  unsigned threads = 1;
};

/// Polynomial in A (index k is A^k). Throws Error(CapExceeded) above the
/// crossing cap and Error(EmptyDiagram) for the empty link.
QuarterLaurent kauffman_bracket(const LinkDiagram& d, const BracketOptions& options = {});

/// Jones polynomial in t under the given convention. Exponents lie in
/// Z + (mu - 1)/2.
QuarterLaurent jones_reduced(const LinkDiagram& d, ConventionBundle convention,
                             const BracketOptions& options = {});

/// Jones polynomial of the mu-component unlink, (-t^{1/2} - t^{-1/2})^{mu-1}.
QuarterLaurent unlink_jones(std::size_t mu);

/// Jones value each anchor diagram must reproduce: trefoil_left must give
/// -t^4+t^3+t, whitehead must give
/// t^{7/2}-2t^{5/2}+t^{3/2}-2t^{1/2}+t^{-1/2}-t^{-3/2}.
QuarterLaurent trefoil_left_anchor();
QuarterLaurent whitehead_anchor();

using NamedDiagrams = std::vector<std::pair<std::string, LinkDiagram>>;

/// Picks invert_t so that the corpus entries "trefoil_left" and "whitehead"
/// reproduce their anchors. Throws Error(CalibrationFailed) if either entry is
/// missing or no setting matches both.
ConventionBundle calibrate(const NamedDiagrams& corpus);

/// Calibration against the built-in corpus (computed once).
ConventionBundle calibrated_convention();

}  // namespace jlint
