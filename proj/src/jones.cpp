#include "jlint/jones.hpp"

#include <cstdint>
#include <future>
#include <numeric>

#include "jlint/corpus.hpp"
#include "jlint/error.hpp"

namespace jlint {

namespace {

// counts[a_minus_b + c][loops] over a contiguous block of states.
using StateHistogram = std::vector<std::vector<std::uint64_t>>;

StateHistogram count_states(const LinkDiagram& d, std::uint64_t first, std::uint64_t last) {
  const auto c = d.crossing_count();
  const auto arcs = static_cast<std::size_t>(d.max_arc());
  StateHistogram hist(2 * c + 1, std::vector<std::uint64_t>(arcs + 1, 0));
  std::vector<int> parent(arcs + 1);

  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y, std::size_t& loops) {
    x = find(x);
    y = find(y);
    if (x != y) {
      parent[x] = y;
      --loops;
    }
  };

  for (std::uint64_t state = first; state < last; ++state) {
    std::iota(parent.begin(), parent.end(), 0);
    std::size_t loops = arcs;
    int a_minus_b = 0;
    for (std::size_t i = 0; i < c; ++i) {
      const auto& [a, b, cc, dd] = d.crossings()[i].arcs;
      if ((state >> i) & 1U) {
        // B-smoothing joins a-d and b-c.
        unite(a, dd, loops);
        unite(b, cc, loops);
        --a_minus_b;
      } else {
        // A-smoothing joins a-b and c-d.
        unite(a, b, loops);
        unite(cc, dd, loops);
        ++a_minus_b;
      }
    }
    ++hist[static_cast<std::size_t>(a_minus_b + static_cast<int>(c))][loops];
  }
  return hist;
}

QuarterLaurent loop_value() { return QuarterLaurent::monomial(-1, 2) + QuarterLaurent::monomial(-1, -2); }

}  // namespace

QuarterLaurent kauffman_bracket(const LinkDiagram& d, const BracketOptions& options) {
  const auto c = d.crossing_count();
  if (c > options.crossing_cap)
    throw Error(ErrorCode::CapExceeded,
                std::to_string(c) + " crossings exceeds the cap of " + std::to_string(options.crossing_cap));
  if (c >= 63) throw Error(ErrorCode::CapExceeded, "state space does not fit in 64 bits");
  if (d.component_count() == 0) throw Error(ErrorCode::EmptyDiagram, "bracket of the empty link");

  const std::uint64_t states = std::uint64_t{1} << c;
  const unsigned workers = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(states)));
  StateHistogram total;
  if (workers == 1) {
    total = count_states(d, 0, states);
  } else {
    std::vector<std::future<StateHistogram>> parts;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t first = states * w / workers;
      const std::uint64_t last = states * (w + 1) / workers;
      parts.push_back(std::async(std::launch::async, [&d, first, last] { return count_states(d, first, last); }));
    }
    for (auto& part : parts) {
      auto hist = part.get();
      if (total.empty()) {
        total = std::move(hist);
        continue;
      }
      for (std::size_t i = 0; i < total.size(); ++i)
        for (std::size_t j = 0; j < total[i].size(); ++j) total[i][j] += hist[i][j];
    }
  }

  // Crossing-free components each contribute one extra loop.
  const auto extras = static_cast<std::size_t>(d.unknotted_extras());
  const QuarterLaurent delta = loop_value();
  std::vector<QuarterLaurent> delta_powers{QuarterLaurent(1)};
  QuarterLaurent result;
  for (std::size_t k = 0; k < total.size(); ++k) {
    const long a_exponent = static_cast<long>(k) - static_cast<long>(c);
    for (std::size_t loops = 0; loops < total[k].size(); ++loops) {
      if (total[k][loops] == 0) continue;
      const auto power = loops + extras - 1;
      while (delta_powers.size() <= power) delta_powers.push_back(delta_powers.back() * delta);
      result += delta_powers[power].shifted(a_exponent).scaled(Rational(Integer(total[k][loops])));
    }
  }
  return result;
}

QuarterLaurent jones_reduced(const LinkDiagram& d, ConventionBundle convention, const BracketOptions& options) {
  const long w = d.writhe();
  const QuarterLaurent writhe_factor = QuarterLaurent::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
  const QuarterLaurent in_a = writhe_factor * kauffman_bracket(d, options);
  // A = t^{-1/4} negates the exponent index; inverting t negates it back.
  return convention.invert_t ? in_a : in_a.invert_variable();
}

QuarterLaurent unlink_jones(std::size_t mu) {
  if (mu == 0) throw Error(ErrorCode::EmptyDiagram, "Jones polynomial of the empty link");
  return pow(-QuarterLaurent::delta(), mu - 1);
}

QuarterLaurent trefoil_left_anchor() { return QuarterLaurent::parse("-t^4+t^3+t"); }

QuarterLaurent whitehead_anchor() {
  return QuarterLaurent::parse("t^{7/2}-2t^{5/2}+t^{3/2}-2t^{1/2}+t^{-1/2}-t^{-3/2}");
}

ConventionBundle calibrate(const NamedDiagrams& corpus) {
  const LinkDiagram* trefoil = nullptr;
  const LinkDiagram* whitehead = nullptr;
  for (const auto& [name, d] : corpus) {
    if (name == "trefoil_left") trefoil = &d;
    if (name == "whitehead") whitehead = &d;
  }
  if (trefoil == nullptr || whitehead == nullptr)
    throw Error(ErrorCode::CalibrationFailed, "corpus must contain trefoil_left and whitehead");

  for (bool invert : {false, true}) {
    const ConventionBundle candidate{invert};
    if (jones_reduced(*trefoil, candidate) == trefoil_left_anchor() &&
        jones_reduced(*whitehead, candidate) == whitehead_anchor())
      return candidate;
  }
  throw Error(ErrorCode::CalibrationFailed, "no convention reproduces both the trefoil and Whitehead anchors");
}

ConventionBundle calibrated_convention() {
  static const ConventionBundle bundle = [] {
    NamedDiagrams corpus;
    for (const auto& e : corpus_entries()) corpus.emplace_back(std::string(e.name), LinkDiagram::parse(e.pd));
    return calibrate(corpus);
  }();
  return bundle;
}

}  // namespace jlint
