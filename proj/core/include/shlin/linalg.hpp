#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "shlin/gf.hpp"

namespace shlin {

// A vector of F_q^r. Value type; the field context is shared.
class FqVector {
 public:
  FqVector(FieldPtr field, std::size_t dim);
  FqVector(FieldPtr field, std::vector<Elem> coords);

  static FqVector unit(FieldPtr field, std::size_t dim, std::size_t i);

  // Inverse of encode(): first coordinate is the most significant digit.
  static FqVector decode(FieldPtr field, std::size_t dim, std::uint64_t code);

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::size_t dim() const noexcept { return coords_.size(); }
  std::span<const Elem> coords() const noexcept { return coords_; }

  Elem operator[](std::size_t i) const noexcept { return coords_[i]; }
  void set(std::size_t i, Elem value);

  bool is_zero() const noexcept;
  std::size_t weight() const noexcept;

  // sum_i coords[i] * q^(dim-1-i). Canonical order of vectors is the order of
  // this integer. Throws SpaceTooLarge when q^dim does not fit in 63 bits.
  std::uint64_t encode() const;

  // Raw coordinate bytes; a hash key that works for any dimension.
  std::string key() const { return {coords_.begin(), coords_.end()}; }

  FqVector& operator+=(const FqVector& other);
  FqVector& operator-=(const FqVector& other);
  FqVector& scale(Elem alpha) noexcept;
  // this += alpha * other
  FqVector& add_scaled(Elem alpha, const FqVector& other);

  friend FqVector operator+(FqVector a, const FqVector& b) { return a += b; }
  friend FqVector operator-(FqVector a, const FqVector& b) { return a -= b; }
  friend FqVector operator*(Elem alpha, FqVector v) { return v.scale(alpha); }

  friend bool operator==(const FqVector& a, const FqVector& b) noexcept {
    return a.coords_ == b.coords_;
  }
  friend std::strong_ordering operator<=>(const FqVector& a, const FqVector& b) noexcept {
    return a.coords_ <=> b.coords_;
  }

 private:
  void check_compatible(const FqVector& other) const;

  FieldPtr field_;
  std::vector<Elem> coords_;
};

// Row-major dense matrix over F_q. Used for both generator and parity-check
// roles.
class FqMatrix {
 public:
  FqMatrix(FieldPtr field, std::size_t rows, std::size_t cols);
  FqMatrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  static FqMatrix identity(FieldPtr field, std::size_t n);
  static FqMatrix from_rows(FieldPtr field, std::size_t cols, std::span<const FqVector> rows);
  static FqMatrix from_cols(FieldPtr field, std::size_t rows, std::span<const FqVector> cols);

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem at(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  Elem& at(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  std::span<const Elem> row_span(std::size_t i) const noexcept {
    return {data_.data() + i * cols_, cols_};
  }

  FqVector row(std::size_t i) const;
  FqVector col(std::size_t j) const;
  std::vector<FqVector> row_vectors() const;
  std::vector<FqVector> col_vectors() const;

  FqMatrix transpose() const;
  FqMatrix operator*(const FqMatrix& rhs) const;
  bool is_zero() const noexcept;

  friend bool operator==(const FqMatrix& a, const FqMatrix& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

struct Rref {
  FqMatrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivot_cols;
};

Rref rref(const FqMatrix& m);
std::size_t rank(const FqMatrix& m);

// Basis of {v : M v^T = 0}, one vector per free column of rref(M).
std::vector<FqVector> kernel_basis(const FqMatrix& m);

bool is_linearly_independent(std::span<const FqVector> vs);
bool in_span(const FqVector& v, std::span<const FqVector> vs);

// Maximal independent sublist, scanning in input order and keeping a vector
// iff it raises the rank.
std::vector<std::size_t> extract_basis_indices(std::span<const FqVector> vs);
std::vector<FqVector> extract_basis(std::span<const FqVector> vs);

// Bit-packed vector over F_2 (64 coordinates per word, coordinate i at bit
// i % 64 of word i / 64). Addition is wordwise XOR.
class PackedF2Vector {
 public:
  explicit PackedF2Vector(std::size_t dim);
  static PackedF2Vector pack(const FqVector& v);  // requires q == 2

  FqVector unpack(FieldPtr field) const;

  std::size_t dim() const noexcept { return dim_; }
  bool get(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool bit) noexcept;
  std::size_t weight() const noexcept;
  bool is_zero() const noexcept;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  PackedF2Vector& operator^=(const PackedF2Vector& other) noexcept;
  friend bool operator==(const PackedF2Vector&, const PackedF2Vector&) = default;

 private:
  std::size_t dim_;
  std::vector<std::uint64_t> words_;
};

// Rank over F_2 by XOR elimination.
std::size_t rank_packed(std::vector<PackedF2Vector> rows);

}  // namespace shlin
