#include "jlint/corpus.hpp"

#include <array>

#include "jlint/error.hpp"

namespace jlint {

namespace {

// PD codes follow the KnotTheory`/KnotInfo tables (3_1, 4_1, L2a1, L5a1,
// L6a4); trefoil_right and hopf_pos are the mirror images.
constexpr std::array kEntries{
    CorpusEntry{"unknot", "crossing-free unknot", "U\n"},
    CorpusEntry{"trefoil_left", "left-handed trefoil 3_1, writhe -3",
                "X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n"},
    CorpusEntry{"trefoil_right", "right-handed trefoil, mirror of trefoil_left",
                "X 4 2 5 1\nX 6 4 1 3\nX 2 6 3 5\n"},
    CorpusEntry{"figure8", "figure-eight knot 4_1", "X 4 2 5 1\nX 8 6 1 5\nX 6 3 7 4\nX 2 7 3 8\n"},
    CorpusEntry{"hopf_pos", "positive Hopf link, linking number +1", "X 1 3 2 4\nX 3 1 4 2\n"},
    CorpusEntry{"whitehead", "Whitehead link 5^2_1 (L5a1)",
                "X 6 1 7 2\nX 10 7 5 8\nX 4 5 1 6\nX 2 10 3 9\nX 8 4 9 3\n"},
    CorpusEntry{"borromean", "Borromean rings 6^3_2 (L6a4)",
                "X 6 1 7 2\nX 12 8 9 7\nX 4 12 1 11\nX 10 5 11 6\nX 8 4 5 3\nX 2 9 3 10\n"},
};

}  // namespace

std::span<const CorpusEntry> corpus_entries() { return kEntries; }

const CorpusEntry& corpus_entry(std::string_view name) {
  for (const auto& e : kEntries)
    if (e.name == name) return e;
  throw Error(ErrorCode::UnknownName, "no corpus entry named '" + std::string(name) + "'");
}

LinkDiagram builtin_corpus(std::string_view name) { return LinkDiagram::parse(corpus_entry(name).pd); }

}  // namespace jlint
