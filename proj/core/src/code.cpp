#include "shlin/code.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

#include "parallel.hpp"
#include "shlin/combinatorics.hpp"
#include "shlin/error.hpp"

namespace shlin {

std::size_t hamming_distance(const FqVector& x, const FqVector& y) {
  if (x.dim() != y.dim()) throw Error(ErrorCode::DimensionMismatch, "vectors of different length");
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.dim(); ++i) d += (x[i] != y[i]) ? 1 : 0;
  return d;
}

LinearCode::LinearCode(FqMatrix gen, FqMatrix pchk) : gen_(std::move(gen)), pchk_(std::move(pchk)) {}

LinearCode LinearCode::from_parity_check(const FqMatrix& h) {
  const auto kernel = kernel_basis(h);
  const auto rows = h.row_vectors();
  const auto indep = extract_basis(rows);
  return LinearCode(FqMatrix::from_rows(h.field_ptr(), h.cols(), kernel),
                    FqMatrix::from_rows(h.field_ptr(), h.cols(), indep));
}

LinearCode LinearCode::from_generator(const FqMatrix& g) {
  const auto rows = g.row_vectors();
  const auto indep = extract_basis(rows);
  const auto kernel = kernel_basis(g);
  return LinearCode(FqMatrix::from_rows(g.field_ptr(), g.cols(), indep),
                    FqMatrix::from_rows(g.field_ptr(), g.cols(), kernel));
}

void LinearCode::record_distance(int d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "distance must be >= 1");
  if (d != kInfiniteDistance && !singleton_ok(n(), k(), d)) {
    throw Error(ErrorCode::InvalidArgument, "distance violates the Singleton bound");
  }
  if (d < d_lower_) throw Error(ErrorCode::InvalidArgument, "distance below the certified lower bound");
  if (d_known_ && *d_known_ != d) throw Error(ErrorCode::InvalidArgument, "distance already recorded");
  d_known_ = d;
  d_lower_ = std::max(d_lower_, d);
}

void LinearCode::record_lower_bound(int d) {
  if (d_known_ && d > *d_known_) throw Error(ErrorCode::InvalidArgument, "lower bound exceeds exact distance");
  d_lower_ = std::max(d_lower_, d);
}

FqVector LinearCode::encode(std::span<const Elem> message) const {
  if (message.size() != k()) throw Error(ErrorCode::DimensionMismatch, "message length differs from k");
  FqVector out(field_ptr(), n());
  const Field& f = field();
  for (std::size_t i = 0; i < k(); ++i) {
    if (message[i] == 0) continue;
    auto row = gen_.row_span(i);
    for (std::size_t j = 0; j < n(); ++j) out.set(j, f.add(out[j], f.mul(message[i], row[j])));
  }
  return out;
}

std::vector<FqVector> LinearCode::codewords(std::uint64_t budget) const {
  const auto total = checked_pow(static_cast<std::uint64_t>(field().q()), static_cast<unsigned>(k()));
  if (!total || *total > budget) throw Error(ErrorCode::BudgetExceeded, "q^k exceeds the codeword budget");
  std::vector<FqVector> out;
  out.reserve(*total);
  std::vector<Elem> msg(k(), 0);
  const int q = field().q();
  for (std::uint64_t m = 0; m < *total; ++m) {
    out.push_back(encode(msg));
    for (std::size_t i = 0; i < msg.size(); ++i) {
      if (++msg[i] < q) break;
      msg[i] = 0;
    }
  }
  return out;
}

namespace {

int min_weight_binary(const LinearCode& code, std::uint64_t total, unsigned threads) {
  std::vector<PackedF2Vector> rows;
  for (std::size_t i = 0; i < code.k(); ++i) rows.push_back(PackedF2Vector::pack(code.generator().row(i)));
  std::atomic<int> best{kInfiniteDistance};

  detail::parallel_ranges(total - 1, threads, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    // Walk Gray codes g(i) = i ^ (i >> 1) for i in [begin+1, end+1); each step
    // flips exactly one message bit, so one row XOR per codeword.
    const std::uint64_t first = begin + 1;
    const std::uint64_t last = end + 1;
    if (first >= last) return;
    PackedF2Vector word(code.n());
    const std::uint64_t g0 = first ^ (first >> 1);
    for (std::size_t b = 0; b < rows.size(); ++b) {
      if ((g0 >> b) & 1U) word ^= rows[b];
    }
    int local = static_cast<int>(word.weight());
    for (std::uint64_t i = first + 1; i < last; ++i) {
      word ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
      local = std::min(local, static_cast<int>(word.weight()));
    }
    int cur = best.load();
    while (local < cur && !best.compare_exchange_weak(cur, local)) {
    }
  });
  return best.load();
}

int min_weight_generic(const LinearCode& code, std::uint64_t total, unsigned threads) {
  const Field& f = code.field();
  const auto q = static_cast<std::uint64_t>(f.q());
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  std::atomic<int> best{kInfiniteDistance};

  detail::parallel_ranges(total - 1, threads, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    // Mixed-radix counter over message codes begin+1 .. end; when digit j
    // moves from a to b the codeword gains (b - a) * row_j.
    const std::uint64_t first = begin + 1;
    const std::uint64_t last = end + 1;
    if (first >= last) return;
    std::vector<Elem> msg(k, 0);
    std::uint64_t m = first;
    for (std::size_t i = 0; i < k; ++i) {
      msg[i] = static_cast<Elem>(m % q);
      m /= q;
    }
    FqVector word = code.encode(msg);
    int local = static_cast<int>(word.weight());
    std::vector<Elem> buf(n);
    for (std::uint64_t cur = first + 1; cur < last; ++cur) {
      for (std::size_t i = 0; i < k; ++i) {
        const Elem old = msg[i];
        const Elem next = static_cast<Elem>((old + 1) % static_cast<int>(q));
        msg[i] = next;
        const Elem delta = f.sub(next, old);
        auto row = code.generator().row_span(i);
        for (std::size_t j = 0; j < n; ++j) word.set(j, f.add(word[j], f.mul(delta, row[j])));
        if (next != 0) break;
      }
      local = std::min(local, static_cast<int>(word.weight()));
    }
    int cur = best.load();
    while (local < cur && !best.compare_exchange_weak(cur, local)) {
    }
  });
  return best.load();
}

}  // namespace

int compute_min_distance(const LinearCode& code, std::uint64_t budget, unsigned threads) {
  if (code.k() == 0) return kInfiniteDistance;
  const auto total = checked_pow(static_cast<std::uint64_t>(code.field().q()), static_cast<unsigned>(code.k()));
  if (!total || *total > budget) {
    throw Error(ErrorCode::BudgetExceeded, "q^k exceeds the codeword budget; use min_distance_at_least");
  }
  if (code.field().q() == 2) return min_weight_binary(code, *total, threads);
  return min_weight_generic(code, *total, threads);
}

int min_distance(LinearCode& code, std::uint64_t budget, unsigned threads) {
  if (code.d_known()) return *code.d_known();
  const int d = compute_min_distance(code, budget, threads);
  code.record_distance(d);
  return d;
}

DistanceCheck min_distance_at_least(const LinearCode& code, int d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "d must be >= 1");
  const FqMatrix& h = code.parity_check();
  const auto cols = h.col_vectors();
  const std::size_t n = cols.size();
  const std::size_t max_size = std::min<std::size_t>(static_cast<std::size_t>(d - 1), n);
  std::vector<FqVector> subset;
  for (std::size_t s = 1; s <= max_size; ++s) {
    std::vector<std::size_t> c(s);
    for (std::size_t i = 0; i < s; ++i) c[i] = i;
    do {
      subset.clear();
      for (std::size_t i : c) subset.push_back(cols[i]);
      if (!is_linearly_independent(subset)) return DistanceCheck{false, c};
    } while (next_combination_colex(c, n));
  }
  return DistanceCheck{};
}

bool singleton_ok(std::size_t n, std::size_t k, int d) noexcept {
  if (d < 1) return false;
  return k + static_cast<std::size_t>(d) <= n + 1;
}

}  // namespace shlin
