#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace shlin {

// One row of a best-known-codes table: an [n,k,d_low] code is known to exist
// and no [n,k,d_up+1] code exists.
struct CodeTableEntry {
  int q = 0;
  int n = 0;
  int k = 0;
  int d_low = 0;
  int d_up = 0;
  std::size_t line = 0;

  friend bool operator==(const CodeTableEntry& a, const CodeTableEntry& b) noexcept {
    return a.q == b.q && a.n == b.n && a.k == b.k && a.d_low == b.d_low && a.d_up == b.d_up;
  }
};

// Snapshot CSV: `q,n,k,d_low,d_up` per line; blank lines and lines starting
// with '#' are skipped. Throws ParseError (with line number) or
// SingletonViolation.
std::vector<CodeTableEntry> ingest_table(std::istream& in);
std::vector<CodeTableEntry> ingest_table_file(const std::string& path);

enum class BoundKind { VbarUpper, VbarExact, ShLower, BmaxLog };

std::string to_string(BoundKind kind);

struct Provenance {
  enum class Kind {
    TableExistence,   // entry shows a code with d_low >= 2h+1
    TableNonexistence,  // entry shows d_up < 2h+1
    Subcode,          // excluded because a smaller dimension already is
    Exhaustive,       // every RREF generator matrix checked
    Singleton,        // k + d <= n + 1
  };
  Kind kind;
  std::optional<CodeTableEntry> entry;
  int q = 0;
  // Parameters of the excluded or witnessed code family.
  int n = 0;
  int k = 0;
  int d = 0;
  std::uint64_t candidates = 0;
  std::string text;
};

// value is set when the result is exact (or, for VbarUpper and ShLower, when
// a witness exists); [lower, upper] is the certified interval otherwise.
struct BoundResult {
  BoundKind kind = BoundKind::VbarUpper;
  std::optional<int> value;
  int lower = 0;
  int upper = 0;
  std::vector<Provenance> provenance;
  std::string note;

  bool exact() const noexcept { return value.has_value() && lower == upper; }
};

// Smallest n'-k' over entries with n' >= n, d_low >= 2h+1 and 2h <= n'-k' < n.
// A longer code's column set contains one of n+1 elements, so n' > n also
// witnesses. Throws NoWitness.
BoundResult vbar_upper(const std::vector<CodeTableEntry>& entries, int q, int h, int n);

// vbar_upper plus nonexistence evidence for every smaller r: a table entry
// with d_up < 2h+1, exclusion of a smaller dimension (subcodes), or
// exhaustive RREF enumeration when the candidate count is within budget.
// Returns an interval with a note when evidence is missing.
BoundResult vbar_exact(const std::vector<CodeTableEntry>& entries, int q, int h, int n,
                       std::uint64_t exhaustive_budget = 1'000'000, unsigned threads = 0);

// log_q B_q(n, 2h+1) = n - V(h,n), with the exactness of vbar_exact.
BoundResult bmax_log(const std::vector<CodeTableEntry>& entries, int q, int n, int h,
                     std::uint64_t exhaustive_budget = 1'000'000, unsigned threads = 0);

// Largest n+1 over entries with d_low >= 2h+1 and 2h <= n-k <= r; value is
// empty (the X cell) when nothing qualifies.
BoundResult sh_lower(const std::vector<CodeTableEntry>& entries, int q, int r, int h);

// True when some [n,k] code over F_q reaches distance d, by enumerating all
// reduced row echelon generator matrices. Throws BudgetExceeded when the
// Gaussian binomial count exceeds the budget.
struct ExhaustiveOutcome {
  bool exists = false;
  std::uint64_t candidates = 0;
};
ExhaustiveOutcome exhaustive_code_exists(int q, int n, int k, int d, std::uint64_t budget, unsigned threads = 0);

// Grid of sh_lower values: header `r,h=<h>...`, one row per r, X where empty.
std::string emit_table(const std::vector<CodeTableEntry>& entries, int q, int h_min, int h_max, int r_min, int r_max);

// V series across n: `n,lower,upper,exact`, X where no witness is known.
std::string emit_vbar_series(const std::vector<CodeTableEntry>& entries, int q, int h, int n_min, int n_max,
                             bool exact, std::uint64_t exhaustive_budget = 1'000'000, unsigned threads = 0);

// Consecutive exact values of the series that differ by anything other
// than 0 or 1. Reported, not enforced.
std::vector<std::string> step_violations(const std::vector<CodeTableEntry>& entries, int q, int h, int n_min,
                                         int n_max, std::uint64_t exhaustive_budget = 1'000'000);

// Re-checks every cited entry against the Singleton bound and re-runs
// exhaustive certificates.
bool revalidate(const BoundResult& result, std::uint64_t exhaustive_budget = 1'000'000, unsigned threads = 0);

std::string render(const BoundResult& result);

}  // namespace shlin
