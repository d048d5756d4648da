#pragma once

#include <span>
#include <string>
#include <string_view>

#include "jlint/diagram.hpp"

namespace jlint {

struct CorpusEntry {
  std::string_view name;
  std::string_view description;
  std::string_view pd;
};

/// unknot, trefoil_left, trefoil_right, figure8, hopf_pos, whitehead,
/// borromean.
std::span<const CorpusEntry> corpus_entries();

/// Throws Error(UnknownName).
const CorpusEntry& corpus_entry(std::string_view name);
LinkDiagram builtin_corpus(std::string_view name);

}  // namespace jlint
