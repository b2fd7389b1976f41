#include "shlin/combinatorics.hpp"

namespace shlin {

namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

std::optional<std::uint64_t> binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  u128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) return std::nullopt;
  }
  return static_cast<std::uint64_t>(r);
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned e) noexcept {
  u128 r = 1;
  for (unsigned i = 0; i < e; ++i) {
    r *= base;
    if (r > UINT64_MAX) return std::nullopt;
  }
  return static_cast<std::uint64_t>(r);
}

std::optional<std::uint64_t> gaussian_binomial(std::uint64_t q, unsigned n, unsigned k) noexcept {
  if (k > n) return 0;
  // After step i the running value is [n, i+1]_q, so each division is exact.
  u128 r = 1;
  for (unsigned i = 0; i < k; ++i) {
    auto num = checked_pow(q, n - i);
    auto den = checked_pow(q, i + 1);
    if (!num || !den) return std::nullopt;
    r = r * (*num - 1) / (*den - 1);
    if (r > UINT64_MAX) return std::nullopt;
  }
  return static_cast<std::uint64_t>(r);
}

bool next_combination_lex(std::vector<std::size_t>& c, std::size_t n) noexcept {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool next_combination_colex(std::vector<std::size_t>& c, std::size_t n) noexcept {
  const std::size_t k = c.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t limit = (i + 1 < k) ? c[i + 1] : n;
    if (c[i] + 1 < limit) {
      ++c[i];
      for (std::size_t j = 0; j < i; ++j) c[j] = j;
      return true;
    }
  }
  return false;
}

}  // namespace shlin
