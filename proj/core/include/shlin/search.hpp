#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "shlin/shset.hpp"

namespace shlin {

struct SearchResult {
  std::size_t max_size = 0;
  // One maximum set, elements in ascending encoding order. Empty when no set
  // of at least h elements exists.
  std::vector<FqVector> witness;
  std::uint64_t nodes = 0;
};

// Exact maximum size of an S_h-linear (or, in plain mode, S_h) set in F_q^r
// by depth-first search over elements in encoding order. Sets with fewer
// than h elements do not count. The witness is the first maximum set in
// search order regardless of the thread count. Throws SpaceTooLarge when
// q^r > 2^20.
SearchResult exhaustive_max_sh_set(const FieldPtr& field, std::size_t r, std::size_t h, bool must_contain_zero,
                                   CombinationMode mode = CombinationMode::Linear, unsigned threads = 0);

}  // namespace shlin
