#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "shlin/linalg.hpp"

namespace shlin {

// Minimum distance of the zero code {0} (k = 0). Serialized as 0.
inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

inline constexpr std::uint64_t kDefaultCodewordBudget = 10'000'000;

std::size_t hamming_distance(const FqVector& x, const FqVector& y);

// An [n,k] linear code over F_q, carried as both a generator matrix (k x n)
// and a parity-check matrix ((n-k) x n), each of full row rank.
class LinearCode {
 public:
  // gen = kernel basis of H; pchk = the independent rows of H in order.
  static LinearCode from_parity_check(const FqMatrix& h);
  // gen = the independent rows of G in order; pchk = kernel basis of G.
  static LinearCode from_generator(const FqMatrix& g);

  const FieldPtr& field_ptr() const noexcept { return gen_.field_ptr(); }
  const Field& field() const noexcept { return gen_.field(); }
  std::size_t n() const noexcept { return gen_.cols(); }
  std::size_t k() const noexcept { return gen_.rows(); }
  const FqMatrix& generator() const noexcept { return gen_; }
  const FqMatrix& parity_check() const noexcept { return pchk_; }

  std::optional<int> d_known() const noexcept { return d_known_; }
  int d_lower() const noexcept { return d_lower_; }

  // Write-once exact distance. Throws InvalidArgument if it contradicts the
  // Singleton bound or the recorded lower bound.
  void record_distance(int d);
  void record_lower_bound(int d);

  // Encodes message digits (length k) as sum_i msg[i] * gen.row(i).
  FqVector encode(std::span<const Elem> message) const;

  // All q^k codewords, in message mixed-radix order.
  std::vector<FqVector> codewords(std::uint64_t budget = kDefaultCodewordBudget) const;

 private:
  LinearCode(FqMatrix gen, FqMatrix pchk);

  FqMatrix gen_;
  FqMatrix pchk_;
  std::optional<int> d_known_;
  int d_lower_ = 1;
};

// Minimum weight over all q^k - 1 nonzero codewords (Gray-code walk with
// packed rows for q = 2). Caches the result into the code. Returns
// kInfiniteDistance when k = 0. Throws BudgetExceeded when q^k > budget.
int min_distance(LinearCode& code, std::uint64_t budget = kDefaultCodewordBudget, unsigned threads = 0);

// Same computation without touching the cache.
int compute_min_distance(const LinearCode& code, std::uint64_t budget = kDefaultCodewordBudget,
                         unsigned threads = 0);

struct DistanceCheck {
  bool holds = true;
  // First dependent column subset (colex order, smallest size first) when
  // holds is false.
  std::vector<std::size_t> dependent_columns;

  explicit operator bool() const noexcept { return holds; }
};

// d(C) >= d iff every set of at most d-1 parity-check columns is linearly
// independent.
DistanceCheck min_distance_at_least(const LinearCode& code, int d);

bool singleton_ok(std::size_t n, std::size_t k, int d) noexcept;

}  // namespace shlin
