#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace shlin {

// C(n, k); nullopt on 64-bit overflow.
std::optional<std::uint64_t> binomial(std::uint64_t n, std::uint64_t k) noexcept;

// base^e; nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned e) noexcept;

// Number of k-dimensional subspaces of F_q^n (Gaussian binomial); nullopt on
// overflow.
std::optional<std::uint64_t> gaussian_binomial(std::uint64_t q, unsigned n, unsigned k) noexcept;

// Advances a sorted k-subset of {0..n-1} to its lexicographic successor.
bool next_combination_lex(std::vector<std::size_t>& c, std::size_t n) noexcept;

// Advances a sorted k-subset of {0..n-1} to its colexicographic successor.
bool next_combination_colex(std::vector<std::size_t>& c, std::size_t n) noexcept;

}  // namespace shlin
