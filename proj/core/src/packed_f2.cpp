#include <bit>

#include "shlin/error.hpp"
#include "shlin/linalg.hpp"

namespace shlin {

PackedF2Vector::PackedF2Vector(std::size_t dim) : dim_(dim), words_((dim + 63) / 64, 0) {}

PackedF2Vector PackedF2Vector::pack(const FqVector& v) {
  if (v.field().q() != 2) throw Error(ErrorCode::FieldMismatch, "packed vectors require q = 2");
  PackedF2Vector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i]) out.words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  return out;
}

FqVector PackedF2Vector::unpack(FieldPtr field) const {
  if (field->q() != 2) throw Error(ErrorCode::FieldMismatch, "packed vectors require q = 2");
  FqVector v(std::move(field), dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (get(i)) v.set(i, 1);
  }
  return v;
}

void PackedF2Vector::set(std::size_t i, bool bit) noexcept {
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (bit) {
    words_[i / 64] |= mask;
  } else {
    words_[i / 64] &= ~mask;
  }
}

std::size_t PackedF2Vector::weight() const noexcept {
  std::size_t w = 0;
  for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool PackedF2Vector::is_zero() const noexcept {
  for (auto word : words_) {
    if (word) return false;
  }
  return true;
}

PackedF2Vector& PackedF2Vector::operator^=(const PackedF2Vector& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::size_t rank_packed(std::vector<PackedF2Vector> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t dim = rows.front().dim();
  for (std::size_t c = 0; c < dim && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && !rows[piv].get(c)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && rows[i].get(c)) rows[i] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

}  // namespace shlin
