#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shlin/code.hpp"
#include "shlin/shset.hpp"

namespace shlin {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Line-oriented summary of one conversion: key=value pairs describing input
// and output, then one line per named check.
struct CorrespondenceReport {
  std::string direction;
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<Check> checks;

  bool valid() const noexcept;
  void add_field(std::string key, std::string value);
  void add_check(std::string name, bool passed, std::string detail = {});
  std::string render() const;
};

struct SetFromCode {
  ShSetCandidate set;
  CorrespondenceReport report;
};

struct CodeFromSet {
  LinearCode code;
  // r x n matrix whose columns are the nonzero elements of the working set.
  FqMatrix pchk;
  // The working set: A, A with 0 adjoined, or a translate of A (q = 2).
  ShSetCandidate working_set;
  CorrespondenceReport report;
};

struct Extension {
  ShSetCandidate set;
  std::size_t added = 0;
  CorrespondenceReport report;
};

struct RoundTrip {
  bool same_code = false;
  // Column j of the rebuilt parity-check matrix is column permutation[j] of
  // the original one.
  std::vector<std::size_t> permutation;
  CorrespondenceReport report;
};

// Columns of the parity-check matrix followed by the zero vector. Requires
// n-k >= 2h, pairwise distinct nonzero columns and d >= 2h+1 (taken from the
// cached distance or certified by column-subset search).
SetFromCode code_to_set(const LinearCode& code, std::size_t h);

// Parity-check matrix from the nonzero elements of an S_h-linear set, sorted
// by encoding. 0 is adjoined when that keeps the set S_h-linear; otherwise
// for q = 2 the set is translated by its first element.
CodeFromSet set_to_code(const ShSetCandidate& a);

// Greedy single pass over F_q^r in encoding order, appending every vector
// that keeps the set S_h-linear. The result is maximal, not necessarily
// maximum.
Extension extend_to_maximal(const ShSetCandidate& a);

RoundTrip round_trip_check(const LinearCode& code, std::size_t h,
                           std::uint64_t budget = kDefaultCodewordBudget);

}  // namespace shlin
