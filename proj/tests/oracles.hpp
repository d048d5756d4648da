#pragma once

// Test-only reference computations, deliberately sharing no code path with
// the library implementation they check.

#include <map>
#include <vector>

#include <gmpxx.h>

#include "jlint/diagram.hpp"

namespace jlint::testing {

/// Kauffman bracket by walking each state's smoothed curves endpoint by
/// endpoint, with integer coefficients keyed by the power of A.
inline std::map<long, mpz_class> bracket_by_walking(const LinkDiagram& d) {
  const auto& xs = d.crossings();
  const std::size_t c = xs.size();
  // endpoints[arc] = the two (crossing, slot) positions of that arc.
  std::map<int, std::vector<std::pair<std::size_t, int>>> endpoints;
  for (std::size_t i = 0; i < c; ++i)
    for (int s = 0; s < 4; ++s) endpoints[xs[i].arcs[s]].push_back({i, s});

  // (-A^2 - A^{-2})^n by repeated convolution.
  auto delta_power = [](long n) {
    std::map<long, mpz_class> p{{0, 1}};
    for (long i = 0; i < n; ++i) {
      std::map<long, mpz_class> q;
      for (const auto& [k, v] : p) {
        q[k + 2] -= v;
        q[k - 2] -= v;
      }
      p = q;
    }
    return p;
  };

  std::map<long, mpz_class> total;
  for (unsigned long state = 0; state < (1UL << c); ++state) {
    // Slot partner inside each crossing for this state.
    auto partner = [&](std::size_t i, int slot) {
      const bool b_smoothing = (state >> i) & 1UL;
      static constexpr int kA[4] = {1, 0, 3, 2};  // a-b, c-d
      static constexpr int kB[4] = {3, 2, 1, 0};  // a-d, b-c
      return b_smoothing ? kB[slot] : kA[slot];
    };
    std::map<int, bool> seen;
    long loops = d.unknotted_extras();
    for (const auto& [start, ends] : endpoints) {
      if (seen[start]) continue;
      ++loops;
      int arc = start;
      auto at = ends[1];
      while (!seen[arc]) {
        seen[arc] = true;
        const int next_slot = partner(at.first, at.second);
        const int next_arc = xs[at.first].arcs[next_slot];
        const auto& e = endpoints[next_arc];
        // Leave next_arc through its other endpoint.
        const std::pair<std::size_t, int> entered{at.first, next_slot};
        at = e[0] == entered ? e[1] : e[0];
        arc = next_arc;
      }
    }
    const long a_count = static_cast<long>(c) - __builtin_popcountl(state);
    const long b_count = static_cast<long>(c) - a_count;
    for (const auto& [k, v] : delta_power(loops - 1)) total[k + a_count - b_count] += v;
  }
  std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
  return total;
}

/// Unknot with one kink per entry of `positive`, strung along one strand.
inline LinkDiagram kinked_unknot(const std::vector<bool>& positive) {
  const int k = static_cast<int>(positive.size());
  std::vector<Crossing> xs;
  for (int j = 0; j < k; ++j) {
    const int in = 2 * j + 1;
    const int loop = 2 * j + 2;
    const int out = j + 1 == k ? 1 : 2 * j + 3;
    // Under first, then around the loop and over the crossing.
    if (positive[static_cast<std::size_t>(j)])
      xs.push_back(Crossing{{in, out, loop, loop}, true});
    else
      xs.push_back(Crossing{{in, loop, loop, out}, false});
  }
  return LinkDiagram::from_oriented(std::move(xs));
}

}  // namespace jlint::testing
