#include "shlin/search.hpp"

#include <atomic>
#include <cmath>
#include <mutex>

#include "incremental_table.hpp"
#include "parallel.hpp"
#include "shlin/combinatorics.hpp"
#include "shlin/error.hpp"

namespace shlin {

namespace {

struct Shared {
  std::atomic<std::size_t> best{0};
  std::size_t cap = 0;
};

class Branch {
 public:
  Branch(detail::IncrementalTable& table, Shared& shared) : table_(table), shared_(shared) {}

  void run(const std::vector<std::uint64_t>& cands) {
    recurse(cands);
  }

  std::size_t best = 0;
  std::vector<std::uint64_t> best_set;
  std::uint64_t nodes = 0;

 private:
  void recurse(const std::vector<std::uint64_t>& cands) {
    ++nodes;
    const std::size_t size = table_.size();
    if (size > best) {
      best = size;
      best_set = table_.elements();
      std::size_t cur = shared_.best.load();
      while (size > cur && !shared_.best.compare_exchange_weak(cur, size)) {
      }
    }
    if (best >= shared_.cap) return;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      // Local pruning keeps the first maximum of this branch; the shared
      // bound only cuts subtrees that cannot even tie another branch.
      const std::size_t reach = size + (cands.size() - i);
      if (reach <= best || reach < shared_.best.load()) return;
      if (!table_.try_add(cands[i])) continue;
      std::vector<std::uint64_t> next;
      next.reserve(cands.size() - i - 1);
      for (std::size_t j = i + 1; j < cands.size(); ++j) {
        if (table_.can_add(cands[j])) next.push_back(cands[j]);
      }
      recurse(next);
      table_.pop();
    }
  }

  detail::IncrementalTable& table_;
  Shared& shared_;
};

}  // namespace

SearchResult exhaustive_max_sh_set(const FieldPtr& field, std::size_t r, std::size_t h, bool must_contain_zero,
                                   CombinationMode mode, unsigned threads) {
  if (!field) throw Error(ErrorCode::InvalidArgument, "null field");
  detail::IncrementalTable root(field, r, h, mode);
  const std::uint64_t space = root.space_size();

  Shared shared;
  if (mode == CombinationMode::Linear) {
    const double bound = std::max(size_bound(field->q(), r, h, true), size_bound(field->q(), r, h, false));
    shared.cap = static_cast<std::size_t>(std::floor(bound + 1e-9));
  } else {
    shared.cap = static_cast<std::size_t>(space);
  }

  std::vector<std::uint64_t> start;
  if (must_contain_zero) {
    root.try_add(0);
    start.push_back(0);
  }
  std::vector<std::uint64_t> top;
  for (std::uint64_t x = must_contain_zero ? 1 : 0; x < space; ++x) {
    if (root.can_add(x)) top.push_back(x);
  }

  // One task per first free element; each task explores its subtree with a
  // private table.
  std::vector<std::size_t> branch_best(top.size(), 0);
  std::vector<std::vector<std::uint64_t>> branch_set(top.size());
  std::vector<std::uint64_t> branch_nodes(top.size(), 0);
  std::atomic<std::size_t> next_task{0};
  const unsigned workers = static_cast<unsigned>(
      std::max<std::size_t>(1, std::min<std::size_t>(detail::resolve_threads(threads), top.size())));
  detail::parallel_ranges(workers, workers, [&](unsigned, std::uint64_t, std::uint64_t) {
    detail::IncrementalTable table(field, r, h, mode);
    for (std::uint64_t s : start) table.try_add(s);
    while (true) {
      const std::size_t i = next_task.fetch_add(1);
      if (i >= top.size()) break;
      if (table.size() + (top.size() - i) < shared.best.load()) continue;
      table.try_add(top[i]);
      std::vector<std::uint64_t> cands;
      for (std::size_t j = i + 1; j < top.size(); ++j) {
        if (table.can_add(top[j])) cands.push_back(top[j]);
      }
      Branch branch(table, shared);
      branch.run(cands);
      branch_best[i] = branch.best;
      branch_set[i] = std::move(branch.best_set);
      branch_nodes[i] = branch.nodes;
      table.pop();
    }
  });

  SearchResult result;
  result.max_size = start.size();
  std::size_t winner = top.size();
  for (std::size_t i = 0; i < top.size(); ++i) {
    result.nodes += branch_nodes[i];
    if (branch_best[i] > result.max_size) {
      result.max_size = branch_best[i];
      winner = i;
    }
  }
  if (result.max_size < h) {
    result.max_size = 0;
    return result;
  }
  const auto& chosen = winner < top.size() ? branch_set[winner] : start;
  for (std::uint64_t code : chosen) result.witness.push_back(FqVector::decode(field, r, code));
  return result;
}

}  // namespace shlin
