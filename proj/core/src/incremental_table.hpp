#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "shlin/gf.hpp"
#include "shlin/shset.hpp"

namespace shlin::detail {

// Value tables of the canonical j-combinations (j = 0..h) of a growing set,
// with vectors held as integer codes of F_q^r. Level h is an occupancy array
// over the whole space, so adding an element costs one probe per new
// h-combination and fails fast on the first repeated value. Every change is
// undoable, which is what the depth-first search needs.
class IncrementalTable {
 public:
  IncrementalTable(FieldPtr field, std::size_t r, std::size_t h, CombinationMode mode);

  // Adds x if the enlarged set keeps all h-combination values distinct;
  // leaves the state untouched and returns false otherwise.
  bool try_add(std::uint64_t x);
  bool can_add(std::uint64_t x);
  // Undoes the most recent successful try_add.
  void pop();

  std::size_t size() const noexcept { return elems_.size(); }
  const std::vector<std::uint64_t>& elements() const noexcept { return elems_; }
  std::uint64_t space_size() const noexcept { return space_; }

 private:
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t scale(Elem c, std::uint64_t a) const noexcept;

  FieldPtr field_;
  std::size_t r_;
  std::size_t h_;
  CombinationMode mode_;
  std::uint64_t q_;
  std::uint64_t space_;

  // levels_[j] lists the values of the j-combinations, j < h.
  std::vector<std::vector<std::uint64_t>> levels_;
  std::vector<std::uint8_t> top_;
  std::vector<std::uint8_t> member_;
  std::vector<std::uint64_t> elems_;

  struct Frame {
    std::vector<std::size_t> level_sizes;
    std::size_t top_mark;
  };
  std::vector<Frame> frames_;
  std::vector<std::uint64_t> top_added_;
  std::vector<std::uint64_t> scaled_;
};

}  // namespace shlin::detail
