#include "incremental_table.hpp"

#include "shlin/combinatorics.hpp"
#include "shlin/error.hpp"

namespace shlin::detail {

IncrementalTable::IncrementalTable(FieldPtr field, std::size_t r, std::size_t h, CombinationMode mode)
    : field_(std::move(field)), r_(r), h_(h), mode_(mode), q_(static_cast<std::uint64_t>(field_->q())) {
  if (h_ == 0) throw Error(ErrorCode::InvalidArgument, "h must be >= 1");
  const auto space = checked_pow(q_, static_cast<unsigned>(r_));
  if (!space || *space > (std::uint64_t{1} << 20)) throw Error(ErrorCode::SpaceTooLarge, "q^r exceeds 2^20");
  space_ = *space;
  levels_.resize(h_);
  levels_[0].push_back(0);
  top_.assign(space_, 0);
  member_.assign(space_, 0);
}

std::uint64_t IncrementalTable::add(std::uint64_t a, std::uint64_t b) const noexcept {
  if (q_ == 2) return a ^ b;
  const Field& f = *field_;
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  for (std::size_t j = 0; j < r_; ++j) {
    const auto s = f.add(static_cast<Elem>(a % q_), static_cast<Elem>(b % q_));
    out += s * place;
    place *= q_;
    a /= q_;
    b /= q_;
  }
  return out;
}

std::uint64_t IncrementalTable::scale(Elem c, std::uint64_t a) const noexcept {
  if (c == 1) return a;
  const Field& f = *field_;
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  for (std::size_t j = 0; j < r_; ++j) {
    out += f.mul(c, static_cast<Elem>(a % q_)) * place;
    place *= q_;
    a /= q_;
  }
  return out;
}

bool IncrementalTable::try_add(std::uint64_t x) {
  if (x >= space_ || member_[x]) return false;
  const bool single = mode_ == CombinationMode::Plain || x == 0;
  const std::size_t units = single ? 1 : static_cast<std::size_t>(q_ - 1);
  scaled_.resize(units);
  for (std::size_t c = 0; c < units; ++c) scaled_[c] = scale(static_cast<Elem>(c + 1), x);

  const std::size_t mark = top_added_.size();
  for (std::uint64_t base : levels_[h_ - 1]) {
    for (std::size_t c = 0; c < units; ++c) {
      const std::uint64_t v = add(scaled_[c], base);
      if (top_[v]) {
        while (top_added_.size() > mark) {
          top_[top_added_.back()] = 0;
          top_added_.pop_back();
        }
        return false;
      }
      top_[v] = 1;
      top_added_.push_back(v);
    }
  }

  Frame frame;
  frame.top_mark = mark;
  frame.level_sizes.reserve(h_);
  for (const auto& level : levels_) frame.level_sizes.push_back(level.size());
  for (std::size_t j = h_ - 1; j >= 1; --j) {
    const std::size_t prev = frame.level_sizes[j - 1];
    for (std::size_t i = 0; i < prev; ++i) {
      const std::uint64_t base = levels_[j - 1][i];
      for (std::size_t c = 0; c < units; ++c) levels_[j].push_back(add(scaled_[c], base));
    }
  }
  frames_.push_back(std::move(frame));
  member_[x] = 1;
  elems_.push_back(x);
  return true;
}

bool IncrementalTable::can_add(std::uint64_t x) {
  if (!try_add(x)) return false;
  pop();
  return true;
}

void IncrementalTable::pop() {
  if (frames_.empty()) return;
  const Frame& frame = frames_.back();
  for (std::size_t j = 0; j < h_; ++j) levels_[j].resize(frame.level_sizes[j]);
  while (top_added_.size() > frame.top_mark) {
    top_[top_added_.back()] = 0;
    top_added_.pop_back();
  }
  member_[elems_.back()] = 0;
  elems_.pop_back();
  frames_.pop_back();
}

}  // namespace shlin::detail
