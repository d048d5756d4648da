#pragma once

// Planar-diagram (PD) link diagrams.
//
// A crossing is four arc labels read counterclockwise starting from the
// incoming under-strand; the under-strand runs a -> c. Stored crossings are
// always normalised to that convention with respect to the diagram's actual
// orientation, and the over-strand direction is kept alongside. Arc labels
// are canonical: components are ordered by their smallest input label and
// numbered 1, 2, ... along their orientation, so two diagrams that differ
// only by an order-preserving relabelling compare equal.
//
// File format (one item per line, '#' starts a comment):
//   X a b c d   crossing
//   U           crossing-free unknot component
//   O i +|-     keep (+) or reverse (-) the default orientation of component i
//
// Component i (0-based) counts the traced components first (by smallest arc label),
// then crossing-free ones. A traced component's default orientation is the
// one its under-passes dictate; a component that is only ever an over-strand
// defaults to increasing arc labels.

#include <array>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace jlint {

struct Crossing {
  std::array<int, 4> arcs{};
  /// Over-strand runs d -> b. This is exactly the positive crossings.
  bool over_from_d = true;

  int sign() const { return over_from_d ? 1 : -1; }
  int under_in() const { return arcs[0]; }
  int under_out() const { return arcs[2]; }
  int over_in() const { return over_from_d ? arcs[3] : arcs[1]; }
  int over_out() const { return over_from_d ? arcs[1] : arcs[3]; }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

class LinkDiagram {
 public:
  /// The empty link.
  LinkDiagram() = default;

  /// Throws Error(MalformedLine | ArcCount | InconsistentOrientation).
  static LinkDiagram parse(std::string_view text);

  /// Builds a diagram from crossings that already carry orientation.
  /// Arcs are relabelled canonically. Throws Error(ArcCount) or
  /// Error(InconsistentOrientation) if the strands do not close up into
  /// oriented loops.
  static LinkDiagram from_oriented(std::vector<Crossing> crossings, int crossing_free_components = 0);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::size_t crossing_count() const { return crossings_.size(); }
  int unknotted_extras() const { return extras_; }
  std::size_t component_count() const { return components_.size() + static_cast<std::size_t>(extras_); }
  std::size_t traced_component_count() const { return components_.size(); }
  bool is_crossing_free() const { return crossings_.empty(); }

  /// Arc labels of component i in traversal order (empty for crossing-free
  /// components).
  const std::vector<int>& component_arcs(std::size_t i) const;
  std::size_t component_of_arc(int arc) const;
  std::size_t under_component(std::size_t crossing) const;
  std::size_t over_component(std::size_t crossing) const;
  int max_arc() const { return static_cast<int>(2 * crossings_.size()); }

  int writhe() const;

  /// Serialises to the PD file format; parse(to_pd()) == *this.
  std::string to_pd() const;

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.crossings_ == b.crossings_ && a.extras_ == b.extras_;
  }

 private:
  std::vector<Crossing> crossings_;
  int extras_ = 0;
  std::vector<std::vector<int>> components_;
  std::vector<std::size_t> arc_component_;  // indexed by arc label
};

using LinkingMatrix = std::vector<std::vector<long>>;

/// lk(i, j) = half the signed count of crossings between components i != j.
LinkingMatrix linking_matrix(const LinkDiagram& d);
bool is_algebraically_split(const LinkDiagram& d);

/// Connected pieces of the "shares a crossing" graph on components.
/// Crossing-free components form singleton pieces, listed last.
std::vector<LinkDiagram> split_components(const LinkDiagram& d);
/// True when no crossing involves two different components, i.e. the
/// diagram visibly separates every component from the others.
bool is_geometrically_split(const LinkDiagram& d);
LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);

/// Removes the listed components. A crossing between a kept and a deleted
/// strand dissolves and the kept strand's two arcs merge.
/// Throws Error(InvalidComponent).
LinkDiagram delete_components(const LinkDiagram& d, const std::set<std::size_t>& components);
/// Keeps only the listed components.
LinkDiagram sublink(const LinkDiagram& d, const std::set<std::size_t>& components);

/// Swaps over and under at one crossing, flipping its sign.
/// Throws Error(InvalidCrossing).
LinkDiagram change_crossing(const LinkDiagram& d, std::size_t index);
/// Orientation-respecting smoothing of one crossing.
/// Throws Error(InvalidCrossing).
LinkDiagram smooth_crossing(const LinkDiagram& d, std::size_t index);
/// Changes every crossing.
LinkDiagram mirror(const LinkDiagram& d);

}  // namespace jlint
