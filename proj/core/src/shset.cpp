#include "shlin/shset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

#include "shlin/combinatorics.hpp"
#include "shlin/error.hpp"

namespace shlin {

ShSetCandidate::ShSetCandidate(FieldPtr field, std::size_t r, std::vector<FqVector> elems, std::size_t h)
    : field_(std::move(field)), r_(r), elems_(std::move(elems)), h_(h) {
  if (!field_) throw Error(ErrorCode::InvalidArgument, "null field");
  if (h_ == 0) throw Error(ErrorCode::InvalidArgument, "h must be >= 1");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    const FqVector& v = elems_[i];
    if (!v.field().same_as(*field_)) throw Error(ErrorCode::FieldMismatch, "element over a different field");
    if (v.dim() != r_) throw Error(ErrorCode::DimensionMismatch, "element " + std::to_string(i) + " has wrong dimension");
    if (!seen.insert(v.key()).second) {
      throw Error(ErrorCode::DuplicateElement, "element " + std::to_string(i) + " repeats an earlier one");
    }
    if (v.is_zero()) zero_index_ = i;
  }
}

ShSetCandidate ShSetCandidate::with_h(std::size_t h) const {
  ShSetCandidate out = *this;
  if (h == 0) throw Error(ErrorCode::InvalidArgument, "h must be >= 1");
  out.h_ = h;
  return out;
}

ShSetCandidate ShSetCandidate::subset(std::span<const std::size_t> indices) const {
  std::vector<FqVector> picked;
  picked.reserve(indices.size());
  for (std::size_t i : indices) {
    if (i >= elems_.size()) throw Error(ErrorCode::InvalidArgument, "subset index out of range");
    picked.push_back(elems_[i]);
  }
  return ShSetCandidate(field_, r_, std::move(picked), h_);
}

namespace {

// Walks canonical combinations, handing (indices, coefficients, value) to f.
// Partial sums are cached per prefix so advancing the coefficient of term t
// only recomputes terms t..h-1.
template <class F>
void walk(const ShSetCandidate& a, CombinationMode mode, F&& f) {
  const std::size_t h = a.h();
  const std::size_t n = a.size();
  if (h > n) throw Error(ErrorCode::HTooLarge, "h exceeds the number of elements");
  const Field& fld = a.field();
  const auto q = static_cast<std::size_t>(fld.q());
  const std::size_t r = a.r();

  std::vector<Elem> mult(n * q * r, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 1; c < q; ++c) {
      for (std::size_t j = 0; j < r; ++j) mult[(i * q + c) * r + j] = fld.mul(static_cast<Elem>(c), a[i][j]);
    }
  }
  const auto zero = a.zero_index();

  std::vector<std::size_t> idx(h);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<Elem> coef(h);
  std::vector<Elem> maxc(h);
  std::vector<Elem> partial((h + 1) * r, 0);

  auto refill = [&](std::size_t from) {
    for (std::size_t t = from; t < h; ++t) {
      const Elem* prev = &partial[t * r];
      Elem* next = &partial[(t + 1) * r];
      const Elem* m = &mult[(idx[t] * q + coef[t]) * r];
      for (std::size_t j = 0; j < r; ++j) next[j] = fld.add(prev[j], m[j]);
    }
  };

  do {
    for (std::size_t t = 0; t < h; ++t) {
      coef[t] = 1;
      const bool fixed = mode == CombinationMode::Plain || (zero && *zero == idx[t]);
      maxc[t] = fixed ? Elem{1} : static_cast<Elem>(q - 1);
    }
    refill(0);
    while (true) {
      if (!f(idx, coef, std::span<const Elem>(&partial[h * r], r))) return;
      std::size_t t = h;
      while (t > 0 && coef[t - 1] == maxc[t - 1]) {
        coef[t - 1] = 1;
        --t;
      }
      if (t == 0) break;
      ++coef[t - 1];
      refill(t - 1);
    }
  } while (next_combination_lex(idx, n));
}

HCombination make_combination(std::span<const std::size_t> idx, std::span<const Elem> coef) {
  HCombination c;
  c.terms.reserve(idx.size());
  for (std::size_t t = 0; t < idx.size(); ++t) c.terms.push_back(Term{idx[t], coef[t]});
  return c;
}

bool fits_u64(const ShSetCandidate& a) {
  return checked_pow(static_cast<std::uint64_t>(a.field().q()), static_cast<unsigned>(a.r())).has_value();
}

std::uint64_t encode_digits(std::span<const Elem> v, std::uint64_t q) {
  std::uint64_t code = 0;
  for (Elem e : v) code = code * q + e;
  return code;
}

std::string bytes_key(std::span<const Elem> v) { return {v.begin(), v.end()}; }

struct Pair {
  std::uint64_t first = 0;
  std::uint64_t second = 0;
};

// Returns the ordinals of the earliest colliding combination and its
// earliest partner, if any.
template <class Key, class MakeKey>
std::optional<Pair> earliest_collision(const ShSetCandidate& a, CombinationMode mode, MakeKey make_key) {
  std::unordered_map<Key, std::uint64_t> first_seen;
  std::optional<Pair> best;
  std::uint64_t ordinal = 0;
  walk(a, mode, [&](std::span<const std::size_t>, std::span<const Elem>, std::span<const Elem> value) {
    auto [it, inserted] = first_seen.try_emplace(make_key(value), ordinal);
    if (!inserted && (!best || it->second < best->first)) best = Pair{it->second, ordinal};
    ++ordinal;
    return true;
  });
  return best;
}

}  // namespace

void for_each_h_combination(const ShSetCandidate& a, CombinationMode mode, const CombinationVisitor& visit) {
  walk(a, mode, [&](std::span<const std::size_t> idx, std::span<const Elem> coef, std::span<const Elem> value) {
    return visit(make_combination(idx, coef), FqVector(a.field_ptr(), std::vector<Elem>(value.begin(), value.end())));
  });
}

FqVector evaluate(const ShSetCandidate& a, const HCombination& c) {
  FqVector out(a.field_ptr(), a.r());
  for (const Term& t : c.terms) {
    if (t.index >= a.size()) throw Error(ErrorCode::InvalidArgument, "term index out of range");
    out.add_scaled(t.coef, a[t.index]);
  }
  return out;
}

std::uint64_t count_h_combinations(const ShSetCandidate& a, CombinationMode mode) {
  const std::uint64_t n = a.size();
  const std::uint64_t h = a.h();
  if (h > n) throw Error(ErrorCode::HTooLarge, "h exceeds the number of elements");
  auto overflow = [] { return Error(ErrorCode::BudgetExceeded, "combination count overflows 64 bits"); };
  auto need = [&](std::optional<std::uint64_t> v) {
    if (!v) throw overflow();
    return *v;
  };
  if (mode == CombinationMode::Plain) return need(binomial(n, h));
  const std::uint64_t units = static_cast<std::uint64_t>(a.field().q()) - 1;
  auto term = [&](std::uint64_t e, std::uint64_t nn, std::uint64_t kk) {
    std::uint64_t v = 0;
    if (__builtin_mul_overflow(need(checked_pow(units, static_cast<unsigned>(e))), need(binomial(nn, kk)), &v)) {
      throw overflow();
    }
    return v;
  };
  if (!a.contains_zero()) return term(h, n, h);
  const std::uint64_t with_zero = term(h - 1, n - 1, h - 1);
  const std::uint64_t without = h <= n - 1 ? term(h, n - 1, h) : 0;
  if (with_zero > std::numeric_limits<std::uint64_t>::max() - without) throw overflow();
  return with_zero + without;
}

std::vector<FqVector> h_span(const ShSetCandidate& a, CombinationMode mode) {
  std::set<std::vector<Elem>> values;
  walk(a, mode, [&](std::span<const std::size_t>, std::span<const Elem>, std::span<const Elem> value) {
    values.emplace(value.begin(), value.end());
    return true;
  });
  std::vector<FqVector> out;
  out.reserve(values.size());
  for (const auto& v : values) out.emplace_back(a.field_ptr(), v);
  return out;
}

Verdict verify(const ShSetCandidate& a, CombinationMode mode) {
  std::optional<Pair> hit;
  if (fits_u64(a)) {
    const auto q = static_cast<std::uint64_t>(a.field().q());
    hit = earliest_collision<std::uint64_t>(a, mode, [q](std::span<const Elem> v) { return encode_digits(v, q); });
  } else {
    hit = earliest_collision<std::string>(a, mode, bytes_key);
  }
  if (!hit) return {};

  std::optional<HCombination> lhs;
  std::optional<HCombination> rhs;
  std::optional<FqVector> value;
  std::uint64_t ordinal = 0;
  walk(a, mode, [&](std::span<const std::size_t> idx, std::span<const Elem> coef, std::span<const Elem> v) {
    if (ordinal == hit->first) {
      lhs = make_combination(idx, coef);
      value = FqVector(a.field_ptr(), std::vector<Elem>(v.begin(), v.end()));
    } else if (ordinal == hit->second) {
      rhs = make_combination(idx, coef);
      return false;
    }
    ++ordinal;
    return true;
  });
  return Verdict{CollisionWitness{std::move(*lhs), std::move(*rhs), std::move(*value)}};
}

Verdict is_sh_linear(const ShSetCandidate& a) { return verify(a, CombinationMode::Linear); }

Verdict is_sh_set(const ShSetCandidate& a) { return verify(a, CombinationMode::Plain); }

double size_bound(int q, std::size_t r, std::size_t h, bool contains_zero) {
  if (h == 0) throw Error(ErrorCode::InvalidArgument, "h must be >= 1");
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "q must be >= 2");
  const double hd = static_cast<double>(h);
  const double log_qr = static_cast<double>(r) * std::log(static_cast<double>(q));
  const double log_hfact = std::lgamma(hd + 1.0);
  const double log_units = std::log(static_cast<double>(q - 1));
  if (contains_zero) return std::exp((log_qr + log_hfact - (hd - 1.0) * log_units) / hd) + (hd - 1.0);
  return std::exp((log_qr + log_hfact) / hd - log_units) + (hd - 1.0);
}

ShSetCandidate translate_scale(const ShSetCandidate& a, const FqVector& v, Elem alpha) {
  if (alpha == 0) throw Error(ErrorCode::ScalarZero, "alpha must be nonzero");
  if (!v.field().same_as(a.field())) throw Error(ErrorCode::FieldMismatch, "translation vector over a different field");
  if (v.dim() != a.r()) throw Error(ErrorCode::DimensionMismatch, "translation vector has wrong dimension");
  std::vector<FqVector> out;
  out.reserve(a.size());
  for (const FqVector& x : a.elems()) {
    FqVector y = v;
    y.add_scaled(alpha, x);
    out.push_back(std::move(y));
  }
  return ShSetCandidate(a.field_ptr(), a.r(), std::move(out), a.h());
}

ShSetCandidate adjoin_zero(const ShSetCandidate& a) {
  if (a.contains_zero()) return a;
  std::vector<FqVector> out = a.elems();
  out.emplace_back(a.field_ptr(), a.r());
  return ShSetCandidate(a.field_ptr(), a.r(), std::move(out), a.h());
}

std::optional<std::vector<std::size_t>> check_2h_subsets_independent(const ShSetCandidate& a) {
  if (!a.contains_zero()) throw Error(ErrorCode::PreconditionViolated, "set does not contain the zero vector");
  const std::size_t two_h = 2 * a.h();
  if (!(two_h < a.r() && a.r() <= a.size())) {
    throw Error(ErrorCode::PreconditionViolated, "requires 2h < r <= |A|");
  }
  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero()) nonzero.push_back(i);
  }
  if (nonzero.size() < two_h) return std::nullopt;
  std::vector<std::size_t> c(two_h);
  std::iota(c.begin(), c.end(), std::size_t{0});
  std::vector<FqVector> picked;
  do {
    picked.clear();
    for (std::size_t i : c) picked.push_back(a[nonzero[i]]);
    if (!is_linearly_independent(picked)) {
      std::vector<std::size_t> out;
      for (std::size_t i : c) out.push_back(nonzero[i]);
      return out;
    }
  } while (next_combination_lex(c, nonzero.size()));
  return std::nullopt;
}

ShSetCandidate append_zero_coordinate(const ShSetCandidate& a) {
  std::vector<FqVector> out;
  out.reserve(a.size());
  for (const FqVector& x : a.elems()) {
    std::vector<Elem> coords(x.coords().begin(), x.coords().end());
    coords.push_back(0);
    out.emplace_back(a.field_ptr(), std::move(coords));
  }
  return ShSetCandidate(a.field_ptr(), a.r() + 1, std::move(out), a.h());
}

}  // namespace shlin
