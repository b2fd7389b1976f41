#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace shlin {

// An element of F_q, stored as its polynomial-basis code sum(c_i * p^i).
using Elem = std::uint8_t;

inline constexpr int kMaxFieldOrder = 256;

bool is_prime(int n) noexcept;

// Trial division by every monic polynomial of degree 1..deg/2 over F_p.
// `coeffs` is c_0..c_m, lowest degree first.
bool is_irreducible(int p, const std::vector<int>& coeffs);

// Immutable arithmetic context for F_q, q = p^m <= 256. All q*q addition and
// multiplication results are tabulated at construction, so hot loops are
// plain array lookups. Shared between vectors and matrices via FieldPtr.
class Field {
 public:
  int p() const noexcept { return p_; }
  int m() const noexcept { return m_; }
  int q() const noexcept { return q_; }

  // c_0..c_m of the reduction polynomial; empty for prime fields.
  const std::vector<int>& modulus() const noexcept { return modulus_; }
  bool has_default_modulus() const noexcept { return default_modulus_; }

  Elem add(Elem a, Elem b) const noexcept { return add_[index(a, b)]; }
  Elem sub(Elem a, Elem b) const noexcept { return add_[index(a, neg_[b])]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[index(a, b)]; }
  Elem inv(Elem a) const;  // throws DivisionByZero
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  // Untabulated polynomial arithmetic; the tables are built from these.
  Elem add_direct(Elem a, Elem b) const noexcept;
  Elem mul_direct(Elem a, Elem b) const noexcept;

  bool contains(int code) const noexcept { return code >= 0 && code < q_; }

  // Nonzero elements in ascending code order.
  std::vector<Elem> nonzero_elems() const;

  // Same order and same reduction polynomial.
  bool same_as(const Field& other) const noexcept {
    return q_ == other.q_ && modulus_ == other.modulus_;
  }

  // "q=<q>" plus " poly=<c_0,...,c_m>" when a non-default modulus is in use.
  std::string header() const;

 private:
  friend std::shared_ptr<const Field> make_field(int, int, std::optional<std::vector<int>>);
  Field(int p, int m, std::vector<int> modulus, bool is_default);

  std::size_t index(Elem a, Elem b) const noexcept {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + b;
  }

  int p_;
  int m_;
  int q_;
  std::vector<int> modulus_;
  bool default_modulus_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
};

using FieldPtr = std::shared_ptr<const Field>;

// Built-in moduli: F_4 x^2+x+1, F_8 x^3+x+1, F_9 x^2+1; other extension
// fields use the irreducible with the smallest coefficient code.
std::vector<int> default_modulus(int p, int m);

FieldPtr make_field(int p, int m = 1, std::optional<std::vector<int>> modulus_override = std::nullopt);

// Factors q = p^m and forwards to make_field.
FieldPtr make_field_of_order(int q, std::optional<std::vector<int>> modulus_override = std::nullopt);

}  // namespace shlin
