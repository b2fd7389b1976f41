#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "shlin/linalg.hpp"

namespace shlin {

// A duplicate-free ordered list of vectors of F_q^r together with the
// combination length h.
class ShSetCandidate {
 public:
  ShSetCandidate(FieldPtr field, std::size_t r, std::vector<FqVector> elems, std::size_t h);

  const FieldPtr& field_ptr() const noexcept { return field_; }
  const Field& field() const noexcept { return *field_; }
  std::size_t r() const noexcept { return r_; }
  std::size_t h() const noexcept { return h_; }
  std::size_t size() const noexcept { return elems_.size(); }
  const std::vector<FqVector>& elems() const noexcept { return elems_; }
  const FqVector& operator[](std::size_t i) const noexcept { return elems_[i]; }

  std::optional<std::size_t> zero_index() const noexcept { return zero_index_; }
  bool contains_zero() const noexcept { return zero_index_.has_value(); }

  ShSetCandidate with_h(std::size_t h) const;
  ShSetCandidate subset(std::span<const std::size_t> indices) const;

 private:
  FieldPtr field_;
  std::size_t r_;
  std::vector<FqVector> elems_;
  std::size_t h_;
  std::optional<std::size_t> zero_index_;
};

struct Term {
  std::size_t index;
  Elem coef;
  friend bool operator==(const Term&, const Term&) = default;
};

// Terms have strictly increasing indices and nonzero coefficients; the zero
// vector always carries coefficient 1.
struct HCombination {
  std::vector<Term> terms;
  friend bool operator==(const HCombination&, const HCombination&) = default;
};

struct CollisionWitness {
  HCombination lhs;
  HCombination rhs;
  FqVector value;
};

struct Verdict {
  std::optional<CollisionWitness> witness;

  bool ok() const noexcept { return !witness.has_value(); }
  explicit operator bool() const noexcept { return ok(); }
};

// Linear: every nonzero coefficient (h-linear combinations).
// Plain: coefficient 1 only (sums of h distinct elements).
enum class CombinationMode { Linear, Plain };

using CombinationVisitor = std::function<bool(const HCombination&, const FqVector&)>;

// Visits canonical combinations ordered by index tuple (lex), then by
// coefficient tuple (ascending codes, first term most significant). The
// visitor returns false to stop. Throws HTooLarge when h > |A|.
void for_each_h_combination(const ShSetCandidate& a, CombinationMode mode, const CombinationVisitor& visit);

FqVector evaluate(const ShSetCandidate& a, const HCombination& c);

// (q-1)^h C(|A|,h) without zero, (q-1)^(h-1) C(|A|-1,h-1) + (q-1)^h C(|A|-1,h)
// with zero; C(|A|,h) in plain mode. Throws BudgetExceeded on overflow.
std::uint64_t count_h_combinations(const ShSetCandidate& a, CombinationMode mode = CombinationMode::Linear);

// Distinct values of all canonical combinations, ascending.
std::vector<FqVector> h_span(const ShSetCandidate& a, CombinationMode mode = CombinationMode::Linear);

// The witness is the earliest combination (in visiting order) whose value is
// shared with another one, paired with the earliest such partner.
Verdict is_sh_linear(const ShSetCandidate& a);
Verdict is_sh_set(const ShSetCandidate& a);
Verdict verify(const ShSetCandidate& a, CombinationMode mode);

// Strict upper bound on |A| for an S_h-linear set A of F_q^r.
double size_bound(int q, std::size_t r, std::size_t h, bool contains_zero);

// a -> v + alpha * a. Throws ScalarZero.
ShSetCandidate translate_scale(const ShSetCandidate& a, const FqVector& v, Elem alpha);

// Appends the zero vector unless already present.
ShSetCandidate adjoin_zero(const ShSetCandidate& a);

// Requires 0 in A and 2h < r <= |A| (PreconditionViolated otherwise).
// Returns the first linearly dependent 2h-subset of nonzero elements (as
// indices into A, lex order), or nullopt when all are independent.
std::optional<std::vector<std::size_t>> check_2h_subsets_independent(const ShSetCandidate& a);

// Embeds A into F_q^(r+1) by appending a zero coordinate.
ShSetCandidate append_zero_coordinate(const ShSetCandidate& a);

}  // namespace shlin
