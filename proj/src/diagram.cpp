#include "jlint/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

#include "jlint/error.hpp"

namespace jlint {

namespace {

class DisjointSets {
 public:
  int find(int x) {
    auto [it, inserted] = parent_.try_emplace(x, x);
    if (inserted || it->second == x) return x;
    const int root = find(it->second);
    parent_[x] = root;
    return root;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);  // root stays the smallest label
  }

 private:
  std::map<int, int> parent_;
};

struct RawCrossing {
  std::array<int, 4> arcs;
};

struct Occurrence {
  std::size_t crossing;
  int slot;
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

using OccurrenceMap = std::map<int, std::vector<Occurrence>>;

OccurrenceMap occurrences(const std::vector<RawCrossing>& crossings) {
  OccurrenceMap occ;
  for (std::size_t i = 0; i < crossings.size(); ++i)
    for (int s = 0; s < 4; ++s) occ[crossings[i].arcs[s]].push_back({i, s});
  for (const auto& [arc, list] : occ)
    if (list.size() != 2)
      throw Error(ErrorCode::ArcCount,
                  "arc " + std::to_string(arc) + " occurs " + std::to_string(list.size()) + " times (expected 2)");
  return occ;
}

// One unoriented component traced in a reference direction, plus the
// direction chosen for it by the default rules.
struct TracedComponent {
  std::vector<int> arcs;           // in reference direction, starting at the smallest label
  std::vector<Occurrence> passes;  // entry point of each pass, reference direction
  bool reversed = false;           // default orientation runs against the reference
  bool has_under_pass = false;
};

std::vector<TracedComponent> trace_unoriented(const std::vector<RawCrossing>& crossings) {
  const OccurrenceMap occ = occurrences(crossings);
  std::map<int, bool> visited;
  std::vector<TracedComponent> out;
  for (const auto& [start, start_occ] : occ) {
    if (visited[start]) continue;
    TracedComponent comp;
    int arc = start;
    Occurrence head = start_occ[0];
    while (true) {
      visited[arc] = true;
      comp.arcs.push_back(arc);
      comp.passes.push_back(head);
      const int exit_slot = (head.slot + 2) % 4;
      const int next = crossings[head.crossing].arcs[exit_slot];
      const Occurrence tail{head.crossing, exit_slot};
      const auto& next_occ = occ.at(next);
      head = next_occ[0] == tail ? next_occ[1] : next_occ[0];
      arc = next;
      if (arc == start) break;
    }

    int forward = 0, backward = 0;
    for (const auto& p : comp.passes) {
      if (p.slot == 0) ++forward;
      if (p.slot == 2) ++backward;
    }
    if (forward > 0 && backward > 0)
      throw Error(ErrorCode::InconsistentOrientation, "component through arc " + std::to_string(start) +
                                                          " has under-strands running in both directions");
    comp.has_under_pass = forward + backward > 0;
    if (comp.has_under_pass) {
      comp.reversed = backward > 0;
    } else if (comp.arcs.size() >= 3) {
      // Over-strand only: follow increasing labels out of the smallest arc.
      comp.reversed = comp.arcs.back() < comp.arcs[1];
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<Crossing> orient(const std::vector<RawCrossing>& raw, const std::vector<TracedComponent>& comps,
                             const std::vector<bool>& flip) {
  std::vector<int> under_in(raw.size(), -1), over_in(raw.size(), -1);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const bool reversed = comps[c].reversed != flip[c];
    for (const auto& p : comps[c].passes) {
      const int slot = reversed ? (p.slot + 2) % 4 : p.slot;
      (slot % 2 == 0 ? under_in : over_in)[p.crossing] = slot;
    }
  }
  std::vector<Crossing> out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    Crossing x;
    const int rot = under_in[i];
    for (int s = 0; s < 4; ++s) x.arcs[s] = raw[i].arcs[(s + rot) % 4];
    x.over_from_d = (over_in[i] - rot + 4) % 4 == 3;
    out.push_back(x);
  }
  return out;
}

[[noreturn]] void malformed(std::size_t line_no, const std::string& line, const std::string& why) {
  throw Error(ErrorCode::MalformedLine, "line " + std::to_string(line_no) + " '" + line + "': " + why);
}

bool parse_int(const std::string& token, long& value) {
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

}  // namespace

LinkDiagram LinkDiagram::parse(std::string_view text) {
  std::vector<RawCrossing> raw;
  int extras = 0;
  std::vector<std::pair<long, bool>> overrides;  // component, reverse?

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = line.substr(0, line.find('#'));
    std::istringstream fields(body);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;

    if (tokens[0] == "X") {
      if (tokens.size() != 5) malformed(line_no, line, "a crossing needs exactly four arc ids");
      RawCrossing x{};
      for (int s = 0; s < 4; ++s) {
        long v = 0;
        if (!parse_int(tokens[s + 1], v) || v <= 0 || v > 1'000'000'000)
          malformed(line_no, line, "arc ids must be positive integers");
        x.arcs[s] = static_cast<int>(v);
      }
      raw.push_back(x);
    } else if (tokens[0] == "U") {
      if (tokens.size() != 1) malformed(line_no, line, "'U' takes no arguments");
      ++extras;
    } else if (tokens[0] == "O") {
      long comp = 0;
      if (tokens.size() != 3 || !parse_int(tokens[1], comp) || comp < 0 || (tokens[2] != "+" && tokens[2] != "-"))
        malformed(line_no, line, "expected 'O <component> +|-'");
      overrides.emplace_back(comp, tokens[2] == "-");
    } else {
      malformed(line_no, line, "unknown item '" + tokens[0] + "'");
    }
  }

  const auto comps = trace_unoriented(raw);
  std::vector<bool> flip(comps.size(), false);
  for (const auto& [comp, reverse] : overrides) {
    const auto c = static_cast<std::size_t>(comp);
    if (c >= comps.size() + static_cast<std::size_t>(extras))
      throw Error(ErrorCode::MalformedLine, "orientation override for nonexistent component " + std::to_string(comp));
    if (c < comps.size()) flip[c] = reverse;
  }
  return from_oriented(orient(raw, comps, flip), extras);
}

LinkDiagram LinkDiagram::from_oriented(std::vector<Crossing> crossings, int crossing_free_components) {
  std::map<int, int> count, successor;
  for (const auto& x : crossings) {
    for (int arc : x.arcs) {
      if (arc <= 0) throw Error(ErrorCode::ArcCount, "arc ids must be positive");
      ++count[arc];
    }
  }
  for (const auto& [arc, n] : count)
    if (n != 2)
      throw Error(ErrorCode::ArcCount, "arc " + std::to_string(arc) + " occurs " + std::to_string(n) + " times");
  for (const auto& x : crossings) {
    for (auto [from, to] : {std::pair{x.under_in(), x.under_out()}, std::pair{x.over_in(), x.over_out()}}) {
      if (!successor.emplace(from, to).second)
        throw Error(ErrorCode::InconsistentOrientation, "arc " + std::to_string(from) + " enters two crossings");
    }
  }
  if (successor.size() != count.size())
    throw Error(ErrorCode::InconsistentOrientation, "some arc never enters a crossing");

  LinkDiagram d;
  d.extras_ = crossing_free_components;
  std::map<int, int> relabel;
  int next_label = 1;
  for (const auto& [start, unused] : successor) {
    if (relabel.contains(start)) continue;
    std::vector<int> comp;
    for (int arc = start; !relabel.contains(arc); arc = successor.at(arc)) {
      relabel[arc] = next_label;
      comp.push_back(next_label++);
    }
    d.components_.push_back(std::move(comp));
  }
  d.arc_component_.assign(static_cast<std::size_t>(next_label), 0);
  for (std::size_t c = 0; c < d.components_.size(); ++c)
    for (int arc : d.components_[c]) d.arc_component_[static_cast<std::size_t>(arc)] = c;

  for (auto& x : crossings)
    for (int& arc : x.arcs) arc = relabel.at(arc);
  d.crossings_ = std::move(crossings);
  return d;
}

const std::vector<int>& LinkDiagram::component_arcs(std::size_t i) const {
  static const std::vector<int> kNone;
  if (i >= component_count()) throw Error(ErrorCode::InvalidComponent, "component " + std::to_string(i));
  return i < components_.size() ? components_[i] : kNone;
}

std::size_t LinkDiagram::component_of_arc(int arc) const {
  if (arc <= 0 || static_cast<std::size_t>(arc) >= arc_component_.size())
    throw std::out_of_range("no arc " + std::to_string(arc));
  return arc_component_[static_cast<std::size_t>(arc)];
}

std::size_t LinkDiagram::under_component(std::size_t crossing) const {
  return component_of_arc(crossings_.at(crossing).under_in());
}

std::size_t LinkDiagram::over_component(std::size_t crossing) const {
  return component_of_arc(crossings_.at(crossing).over_in());
}

int LinkDiagram::writhe() const {
  int w = 0;
  for (const auto& x : crossings_) w += x.sign();
  return w;
}

std::string LinkDiagram::to_pd() const {
  std::ostringstream out;
  std::vector<RawCrossing> raw;
  for (const auto& x : crossings_) {
    out << "X " << x.arcs[0] << ' ' << x.arcs[1] << ' ' << x.arcs[2] << ' ' << x.arcs[3] << '\n';
    raw.push_back({x.arcs});
  }
  for (int i = 0; i < extras_; ++i) out << "U\n";
  // Components that never pass under default to increasing labels, which
  // may not be how they are oriented here.
  const auto traced = trace_unoriented(raw);
  for (std::size_t c = 0; c < traced.size(); ++c) {
    if (traced[c].has_under_pass) continue;
    const auto& p = traced[c].passes.front();
    const int default_in = traced[c].reversed ? (p.slot + 2) % 4 : p.slot;
    const int actual_in = crossings_[p.crossing].over_from_d ? 3 : 1;
    if (default_in != actual_in) out << "O " << c << " -\n";
  }
  return out.str();
}

LinkingMatrix linking_matrix(const LinkDiagram& d) {
  const auto mu = d.component_count();
  LinkingMatrix m(mu, std::vector<long>(mu, 0));
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    const auto u = d.under_component(i);
    const auto o = d.over_component(i);
    if (u == o) continue;
    m[u][o] += d.crossings()[i].sign();
    m[o][u] += d.crossings()[i].sign();
  }
  for (auto& row : m)
    for (auto& v : row) v /= 2;
  return m;
}

bool is_algebraically_split(const LinkDiagram& d) {
  for (const auto& row : linking_matrix(d))
    for (long v : row)
      if (v != 0) return false;
  return true;
}

LinkDiagram delete_components(const LinkDiagram& d, const std::set<std::size_t>& components) {
  for (auto c : components)
    if (c >= d.component_count()) throw Error(ErrorCode::InvalidComponent, "no component " + std::to_string(c));
  if (components.empty()) return d;

  auto deleted = [&](std::size_t c) { return components.contains(c); };
  DisjointSets merged;
  std::vector<Crossing> kept;
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    const auto& x = d.crossings()[i];
    const bool du = deleted(d.under_component(i));
    const bool dov = deleted(d.over_component(i));
    if (du && dov) continue;
    if (du)
      merged.unite(x.over_in(), x.over_out());
    else if (dov)
      merged.unite(x.under_in(), x.under_out());
    else
      kept.push_back(x);
  }

  std::set<int> live_classes;
  for (auto& x : kept)
    for (int& arc : x.arcs) {
      arc = merged.find(arc);
      live_classes.insert(arc);
    }
  std::set<int> all_classes;
  for (std::size_t c = 0; c < d.traced_component_count(); ++c)
    if (!deleted(c))
      for (int arc : d.component_arcs(c)) all_classes.insert(merged.find(arc));

  int extras = static_cast<int>(all_classes.size() - live_classes.size());
  for (auto c = d.traced_component_count(); c < d.component_count(); ++c)
    if (!deleted(c)) ++extras;
  return LinkDiagram::from_oriented(std::move(kept), extras);
}

LinkDiagram sublink(const LinkDiagram& d, const std::set<std::size_t>& components) {
  std::set<std::size_t> drop;
  for (std::size_t c = 0; c < d.component_count(); ++c)
    if (!components.contains(c)) drop.insert(c);
  for (auto c : components)
    if (c >= d.component_count()) throw Error(ErrorCode::InvalidComponent, "no component " + std::to_string(c));
  return delete_components(d, drop);
}

std::vector<LinkDiagram> split_components(const LinkDiagram& d) {
  const auto traced = d.traced_component_count();
  std::vector<std::size_t> group(traced);
  std::iota(group.begin(), group.end(), 0);
  auto root = [&](std::size_t c) {
    while (group[c] != c) c = group[c] = group[group[c]];
    return c;
  };
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    const auto a = root(d.under_component(i));
    const auto b = root(d.over_component(i));
    if (a != b) group[std::max(a, b)] = std::min(a, b);
  }

  std::map<std::size_t, std::set<std::size_t>> pieces;
  for (std::size_t c = 0; c < traced; ++c) pieces[root(c)].insert(c);
  for (auto c = traced; c < d.component_count(); ++c) pieces[c].insert(c);

  std::vector<LinkDiagram> out;
  for (const auto& [unused, members] : pieces) out.push_back(sublink(d, members));
  return out;
}

bool is_geometrically_split(const LinkDiagram& d) {
  for (std::size_t i = 0; i < d.crossing_count(); ++i)
    if (d.under_component(i) != d.over_component(i)) return false;
  return true;
}

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
  std::vector<Crossing> crossings = a.crossings();
  const int shift = a.max_arc();
  for (auto x : b.crossings()) {
    for (int& arc : x.arcs) arc += shift;
    crossings.push_back(x);
  }
  return LinkDiagram::from_oriented(std::move(crossings), a.unknotted_extras() + b.unknotted_extras());
}

namespace {

void require_crossing(const LinkDiagram& d, std::size_t index) {
  if (index >= d.crossing_count())
    throw Error(ErrorCode::InvalidCrossing,
                "crossing " + std::to_string(index) + " of " + std::to_string(d.crossing_count()));
}

Crossing flipped(const Crossing& x) {
  const auto& [a, b, c, dd] = x.arcs;
  // The old over-strand becomes the under-strand, read from its incoming arc.
  if (x.over_from_d) return Crossing{{dd, a, b, c}, false};
  return Crossing{{b, c, dd, a}, true};
}

}  // namespace

LinkDiagram change_crossing(const LinkDiagram& d, std::size_t index) {
  require_crossing(d, index);
  auto crossings = d.crossings();
  crossings[index] = flipped(crossings[index]);
  return LinkDiagram::from_oriented(std::move(crossings), d.unknotted_extras());
}

LinkDiagram mirror(const LinkDiagram& d) {
  auto crossings = d.crossings();
  for (auto& x : crossings) x = flipped(x);
  return LinkDiagram::from_oriented(std::move(crossings), d.unknotted_extras());
}

LinkDiagram smooth_crossing(const LinkDiagram& d, std::size_t index) {
  require_crossing(d, index);
  const auto& x = d.crossings()[index];
  DisjointSets merged;
  merged.unite(x.under_in(), x.over_out());
  merged.unite(x.over_in(), x.under_out());

  std::vector<Crossing> kept;
  std::set<int> live_classes;
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    if (i == index) continue;
    Crossing y = d.crossings()[i];
    for (int& arc : y.arcs) {
      arc = merged.find(arc);
      live_classes.insert(arc);
    }
    kept.push_back(y);
  }
  std::set<int> all_classes;
  for (int arc = 1; arc <= d.max_arc(); ++arc) all_classes.insert(merged.find(arc));
  const int closed = static_cast<int>(all_classes.size() - live_classes.size());
  return LinkDiagram::from_oriented(std::move(kept), d.unknotted_extras() + closed);
}

}  // namespace jlint
