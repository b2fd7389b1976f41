#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace shlin::detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Splits [0, total) into contiguous chunks, one per worker, and calls
// body(worker, begin, end). Runs inline when a single worker suffices.
template <class Body>
void parallel_ranges(std::uint64_t total, unsigned threads, Body&& body) {
  const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(resolve_threads(threads), total));
  if (workers == 1) {
    body(0U, std::uint64_t{0}, total);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::uint64_t chunk = total / workers;
  const std::uint64_t extra = total % workers;
  std::uint64_t begin = 0;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t end = begin + chunk + (w < extra ? 1 : 0);
    pool.emplace_back([&body, w, begin, end] { body(static_cast<unsigned>(w), begin, end); });
    begin = end;
  }
}

}  // namespace shlin::detail
