#pragma once

#include "jlint/corpus.hpp"
#include "jlint/diagram.hpp"
#include "test_support.hpp"

namespace jlint::testing {

/// Random diagram built from corpus entries by unions, mirrors, crossing
/// changes and smoothings.
inline LinkDiagram random_diagram(Gen& gen, long max_steps = 3) {
  const auto entries = corpus_entries();
  auto pick = [&] { return builtin_corpus(entries[gen.integer(0, static_cast<long>(entries.size()) - 1)].name); };
  auto crossing = [&](const LinkDiagram& d) {
    return static_cast<std::size_t>(gen.integer(0, static_cast<long>(d.crossing_count()) - 1));
  };
  LinkDiagram d = pick();
  const long steps = gen.integer(0, max_steps);
  for (long s = 0; s < steps; ++s) {
    switch (gen.integer(0, 3)) {
      case 0: d = disjoint_union(d, pick()); break;
      case 1: d = mirror(d); break;
      case 2:
        if (!d.is_crossing_free()) d = change_crossing(d, crossing(d));
        break;
      default:
        if (!d.is_crossing_free()) d = smooth_crossing(d, crossing(d));
        break;
    }
  }
  return d;
}

}  // namespace jlint::testing
