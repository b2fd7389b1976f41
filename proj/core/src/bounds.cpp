#include "shlin/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

#include "parallel.hpp"
#include "shlin/combinatorics.hpp"
#include "shlin/error.hpp"
#include "shlin/gf.hpp"

namespace shlin {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string params(int n, int k, int d) {
  return "[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]";
}

std::string cite(const CodeTableEntry& e) {
  return "q=" + std::to_string(e.q) + " n=" + std::to_string(e.n) + " k=" + std::to_string(e.k) +
         " d_low=" + std::to_string(e.d_low) + " d_up=" + std::to_string(e.d_up) +
         (e.line ? " (line " + std::to_string(e.line) + ")" : "");
}

bool is_prime_power(int q) {
  if (q < 2 || q > kMaxFieldOrder) return false;
  int p = 2;
  while (q % p != 0) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

void require_order(int q) {
  if (!is_prime_power(q)) throw Error(ErrorCode::InvalidArgument, "unsupported q");
}

}  // namespace

std::vector<CodeTableEntry> ingest_table(std::istream& in) {
  std::vector<CodeTableEntry> out;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto fail = [&](const std::string& why) {
      return Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + why);
    };
    int values[5];
    std::size_t field = 0;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = line.find(',', pos);
      const std::string token = trim(line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
      if (field == 5) throw fail("expected 5 fields q,n,k,d_low,d_up");
      int v = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw fail("field " + std::to_string(field + 1) + " is not an integer: '" + token + "'");
      }
      values[field++] = v;
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (field != 5) throw fail("expected 5 fields q,n,k,d_low,d_up");
    CodeTableEntry e{values[0], values[1], values[2], values[3], values[4], line_no};
    if (!is_prime_power(e.q)) throw fail("q is not a supported prime power");
    if (e.n < 1 || e.k < 0 || e.k > e.n) throw fail("requires 0 <= k <= n and n >= 1");
    if (e.d_low < 1 || e.d_low > e.d_up) throw fail("requires 1 <= d_low <= d_up");
    if (e.k + e.d_up > e.n + 1) {
      throw Error(ErrorCode::SingletonViolation, "line " + std::to_string(line_no) + ": " + cite(e) +
                                                     " exceeds k + d <= n + 1");
    }
    out.push_back(e);
  }
  return out;
}

std::vector<CodeTableEntry> ingest_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return ingest_table(in);
}

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::VbarUpper: return "vbar_upper";
    case BoundKind::VbarExact: return "vbar_exact";
    case BoundKind::ShLower: return "sh_lower";
    case BoundKind::BmaxLog: return "bmax_log";
  }
  return "unknown";
}

BoundResult vbar_upper(const std::vector<CodeTableEntry>& entries, int q, int h, int n) {
  require_order(q);
  if (h < 1 || n <= 2 * h) throw Error(ErrorCode::InvalidArgument, "requires n > 2h >= 2");
  const int need = 2 * h + 1;
  const CodeTableEntry* best = nullptr;
  for (const CodeTableEntry& e : entries) {
    const int r = e.n - e.k;
    if (e.q != q || e.n < n || e.d_low < need || r < 2 * h || r >= n) continue;
    if (!best) {
      best = &e;
      continue;
    }
    const int best_r = best->n - best->k;
    if (r < best_r || (r == best_r && e.n < best->n)) best = &e;
  }
  if (!best) {
    throw Error(ErrorCode::NoWitness, "no snapshot entry witnesses an S_" + std::to_string(h) + "-linear set with " +
                                          std::to_string(n + 1) + " elements over F_" + std::to_string(q));
  }
  BoundResult out;
  out.kind = BoundKind::VbarUpper;
  out.value = best->n - best->k;
  out.lower = 2 * h;
  out.upper = *out.value;
  Provenance p;
  p.kind = Provenance::Kind::TableExistence;
  p.entry = *best;
  p.q = q;
  p.n = best->n;
  p.k = best->k;
  p.d = best->d_low;
  p.text = "existence: " + params(best->n, best->k, best->d_low) + " code over F_" + std::to_string(q) + " [" +
           cite(*best) + "]" +
           (best->n > n ? "; " + std::to_string(n + 1) + " of its " + std::to_string(best->n + 1) +
                              " column-set elements suffice"
                        : "");
  out.provenance.push_back(std::move(p));
  return out;
}

namespace {

// Checks one fixed generator matrix (rows as coordinate arrays) for minimum
// distance >= d, stopping at the first light codeword.
bool reaches_distance_generic(const Field& f, const std::vector<std::vector<Elem>>& rows, int n, int d) {
  const std::size_t k = rows.size();
  const int q = f.q();
  std::vector<Elem> msg(k, 0);
  std::vector<Elem> word(static_cast<std::size_t>(n), 0);
  while (true) {
    std::size_t i = 0;
    for (; i < k; ++i) {
      const Elem old = msg[i];
      const Elem next = static_cast<Elem>((old + 1) % q);
      msg[i] = next;
      const Elem delta = f.sub(next, old);
      for (int j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(delta, rows[i][j]));
      if (next != 0) break;
    }
    if (i == k) return true;
    int w = 0;
    for (Elem e : word) w += e != 0;
    if (w < d) return false;
  }
}

bool reaches_distance_binary(const std::vector<std::uint64_t>& rows, int d) {
  std::uint64_t word = 0;
  const std::uint64_t total = std::uint64_t{1} << rows.size();
  for (std::uint64_t i = 1; i < total; ++i) {
    word ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
    if (std::popcount(word) < d) return false;
  }
  return true;
}

}  // namespace

ExhaustiveOutcome exhaustive_code_exists(int q, int n, int k, int d, std::uint64_t budget, unsigned threads) {
  require_order(q);
  if (n < 1 || k < 0 || k > n || d < 1) throw Error(ErrorCode::InvalidArgument, "requires 0 <= k <= n, d >= 1");
  const auto total = gaussian_binomial(static_cast<std::uint64_t>(q), static_cast<unsigned>(n), static_cast<unsigned>(k));
  if (!total || *total > budget) {
    throw Error(ErrorCode::BudgetExceeded, "number of [" + std::to_string(n) + "," + std::to_string(k) +
                                               "] codes exceeds the exhaustive budget");
  }
  ExhaustiveOutcome out;
  out.candidates = *total;
  if (k == 0) {
    out.exists = true;
    return out;
  }
  if (k + d > n + 1) return out;

  const FieldPtr field = make_field_of_order(q);
  std::vector<std::vector<std::size_t>> patterns;
  std::vector<std::size_t> c(static_cast<std::size_t>(k));
  std::iota(c.begin(), c.end(), std::size_t{0});
  do {
    patterns.push_back(c);
  } while (next_combination_lex(c, static_cast<std::size_t>(n)));

  std::atomic<bool> found{false};
  detail::parallel_ranges(patterns.size(), threads, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t pi = begin; pi < end && !found.load(std::memory_order_relaxed); ++pi) {
      const auto& piv = patterns[pi];
      std::vector<char> is_pivot(static_cast<std::size_t>(n), 0);
      for (std::size_t col : piv) is_pivot[col] = 1;
      // Free entries (row, col): right of the row's pivot, outside pivot columns.
      std::vector<std::pair<std::size_t, std::size_t>> free;
      bool viable = true;
      for (std::size_t i = 0; i < piv.size(); ++i) {
        std::size_t count = 0;
        for (std::size_t col = piv[i] + 1; col < static_cast<std::size_t>(n); ++col) {
          if (!is_pivot[col]) {
            free.emplace_back(i, col);
            ++count;
          }
        }
        if (static_cast<int>(count) + 1 < d) viable = false;  // that row alone is too light
      }
      if (!viable) continue;

      std::vector<std::vector<Elem>> rows(piv.size(), std::vector<Elem>(static_cast<std::size_t>(n), 0));
      for (std::size_t i = 0; i < piv.size(); ++i) rows[i][piv[i]] = 1;
      std::vector<std::uint64_t> bits(piv.size(), 0);
      const bool binary = q == 2 && n <= 64;
      if (binary) {
        for (std::size_t i = 0; i < piv.size(); ++i) bits[i] = std::uint64_t{1} << piv[i];
      }
      std::vector<Elem> digits(free.size(), 0);
      while (true) {
        const bool ok = binary ? reaches_distance_binary(bits, d) : reaches_distance_generic(*field, rows, n, d);
        if (ok) {
          found.store(true);
          return;
        }
        std::size_t t = 0;
        for (; t < digits.size(); ++t) {
          digits[t] = static_cast<Elem>((digits[t] + 1) % q);
          const auto [row, col] = free[t];
          rows[row][col] = digits[t];
          if (binary) bits[row] ^= std::uint64_t{1} << col;
          if (digits[t] != 0) break;
        }
        if (t == digits.size()) break;
      }
    }
  });
  out.exists = found.load();
  return out;
}

BoundResult vbar_exact(const std::vector<CodeTableEntry>& entries, int q, int h, int n, std::uint64_t exhaustive_budget,
                       unsigned threads) {
  const BoundResult up = vbar_upper(entries, q, h, n);
  const int need = 2 * h + 1;
  BoundResult out;
  out.kind = BoundKind::VbarExact;
  out.provenance = up.provenance;
  int upper = *up.value;
  std::vector<int> unexcluded;
  std::vector<std::string> notes;
  bool prev_excluded = false;

  for (int r = upper - 1; r >= 2 * h; --r) {
    const int k = n - r;
    Provenance p;
    p.q = q;
    p.n = n;
    p.k = k;
    p.d = need;
    bool excluded = false;
    for (const CodeTableEntry& e : entries) {
      if (e.q == q && e.n == n && e.k == k && e.d_up < need) {
        p.kind = Provenance::Kind::TableNonexistence;
        p.entry = e;
        p.text = "nonexistence: no " + params(n, k, need) + "+ code, d_up=" + std::to_string(e.d_up) + " [" + cite(e) +
                 "]";
        excluded = true;
        break;
      }
    }
    if (!excluded && prev_excluded) {
      p.kind = Provenance::Kind::Subcode;
      p.text = "nonexistence: no " + params(n, k, need) + "+ code, since every such code has a " +
               params(n, k - 1, need) + "+ subcode";
      excluded = true;
    }
    if (!excluded) {
      try {
        const ExhaustiveOutcome ex = exhaustive_code_exists(q, n, k, need, exhaustive_budget, threads);
        p.candidates = ex.candidates;
        if (ex.exists) {
          // Better than the table: the search itself witnesses r.
          p.kind = Provenance::Kind::Exhaustive;
          p.text = "existence: exhaustive search found an " + params(n, k, need) + "+ code among " +
                   std::to_string(ex.candidates) + " RREF generator matrices";
          out.provenance.push_back(p);
          upper = r;
          unexcluded.clear();
          prev_excluded = false;
          continue;
        }
        p.kind = Provenance::Kind::Exhaustive;
        p.text = "nonexistence: none of " + std::to_string(ex.candidates) + " RREF generator matrices of " +
                 params(n, k, need) + "+ codes over F_" + std::to_string(q) + " reaches the distance";
        excluded = true;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExceeded) throw;
        notes.push_back("r=" + std::to_string(r) + " undecided: exhaustive budget exceeded for " +
                        params(n, k, need));
      }
    }
    if (excluded) {
      out.provenance.push_back(std::move(p));
    } else {
      unexcluded.push_back(r);
    }
    prev_excluded = excluded;
  }

  out.upper = upper;
  out.lower = unexcluded.empty() ? upper : *std::min_element(unexcluded.begin(), unexcluded.end());
  if (upper == 2 * h) {
    Provenance p;
    p.kind = Provenance::Kind::Singleton;
    p.q = q;
    p.n = n;
    p.k = n - 2 * h + 1;
    p.d = need;
    p.text = "singleton: an " + params(n, p.k, need) + " code would need k + d <= n + 1; r < 2h is excluded";
    out.provenance.push_back(std::move(p));
  }
  if (out.lower == out.upper) {
    out.value = out.upper;
  } else {
    std::string joined;
    for (const auto& s : notes) joined += (joined.empty() ? "" : "; ") + s;
    out.note = joined;
  }
  return out;
}

BoundResult bmax_log(const std::vector<CodeTableEntry>& entries, int q, int n, int h, std::uint64_t exhaustive_budget,
                     unsigned threads) {
  const BoundResult v = vbar_exact(entries, q, h, n, exhaustive_budget, threads);
  BoundResult out;
  out.kind = BoundKind::BmaxLog;
  out.lower = n - v.upper;
  out.upper = n - v.lower;
  if (v.value) out.value = n - *v.value;
  out.provenance = v.provenance;
  out.note = v.note;
  return out;
}

BoundResult sh_lower(const std::vector<CodeTableEntry>& entries, int q, int r, int h) {
  require_order(q);
  if (h < 1 || r < 0) throw Error(ErrorCode::InvalidArgument, "requires h >= 1, r >= 0");
  const int need = 2 * h + 1;
  const CodeTableEntry* best = nullptr;
  for (const CodeTableEntry& e : entries) {
    const int red = e.n - e.k;
    if (e.q != q || e.d_low < need || red < 2 * h || red > r) continue;
    if (!best || e.n > best->n) best = &e;
  }
  BoundResult out;
  out.kind = BoundKind::ShLower;
  if (!best) {
    out.note = "X";
    return out;
  }
  out.value = best->n + 1;
  out.lower = out.upper = *out.value;
  Provenance p;
  p.kind = Provenance::Kind::TableExistence;
  p.entry = *best;
  p.q = q;
  p.n = best->n;
  p.k = best->k;
  p.d = best->d_low;
  p.text = "existence: " + params(best->n, best->k, best->d_low) + " code gives " + std::to_string(best->n + 1) +
           " elements in F_" + std::to_string(q) + "^" + std::to_string(best->n - best->k) + " [" + cite(*best) + "]";
  out.provenance.push_back(std::move(p));
  return out;
}

std::string emit_table(const std::vector<CodeTableEntry>& entries, int q, int h_min, int h_max, int r_min, int r_max) {
  std::ostringstream out;
  out << 'r';
  for (int h = h_min; h <= h_max; ++h) out << ",h=" << h;
  out << '\n';
  for (int r = r_min; r <= r_max; ++r) {
    out << r;
    for (int h = h_min; h <= h_max; ++h) {
      const BoundResult b = sh_lower(entries, q, r, h);
      out << ',';
      if (b.value) {
        out << *b.value;
      } else {
        out << 'X';
      }
    }
    out << '\n';
  }
  return out.str();
}

namespace {

std::optional<BoundResult> series_point(const std::vector<CodeTableEntry>& entries, int q, int h, int n, bool exact,
                                        std::uint64_t budget, unsigned threads) {
  try {
    return exact ? vbar_exact(entries, q, h, n, budget, threads) : vbar_upper(entries, q, h, n);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoWitness) throw;
    return std::nullopt;
  }
}

}  // namespace

std::string emit_vbar_series(const std::vector<CodeTableEntry>& entries, int q, int h, int n_min, int n_max,
                             bool exact, std::uint64_t exhaustive_budget, unsigned threads) {
  std::ostringstream out;
  out << "n,lower,upper,exact\n";
  for (int n = std::max(n_min, 2 * h + 1); n <= n_max; ++n) {
    const auto b = series_point(entries, q, h, n, exact, exhaustive_budget, threads);
    if (!b) {
      out << n << ",X,X,false\n";
      continue;
    }
    const int lower = exact ? b->lower : 2 * h;
    out << n << ',' << lower << ',' << b->upper << ',' << (lower == b->upper ? "true" : "false") << '\n';
  }
  return out.str();
}

std::vector<std::string> step_violations(const std::vector<CodeTableEntry>& entries, int q, int h, int n_min,
                                         int n_max, std::uint64_t exhaustive_budget) {
  std::vector<std::string> out;
  std::optional<int> prev;
  for (int n = std::max(n_min, 2 * h + 1); n <= n_max; ++n) {
    const auto b = series_point(entries, q, h, n, true, exhaustive_budget, 0);
    if (!b || !b->exact()) {
      prev.reset();
      continue;
    }
    if (prev && (*b->value - *prev < 0 || *b->value - *prev > 1)) {
      out.push_back("n=" + std::to_string(n - 1) + "->" + std::to_string(n) + ": " + std::to_string(*prev) + "->" +
                    std::to_string(*b->value));
    }
    prev = *b->value;
  }
  return out;
}

bool revalidate(const BoundResult& result, std::uint64_t exhaustive_budget, unsigned threads) {
  if (result.provenance.empty()) return false;
  bool saw_existence = false;
  bool saw_nonexistence = false;
  for (const Provenance& p : result.provenance) {
    switch (p.kind) {
      case Provenance::Kind::TableExistence:
      case Provenance::Kind::TableNonexistence:
        if (!p.entry || p.entry->k + p.entry->d_up > p.entry->n + 1 || p.entry->d_low > p.entry->d_up) return false;
        if (p.kind == Provenance::Kind::TableExistence) {
          saw_existence = true;
        } else {
          saw_nonexistence = true;
        }
        break;
      case Provenance::Kind::Exhaustive: {
        const bool claims_existence = p.text.rfind("existence", 0) == 0;
        const ExhaustiveOutcome ex = exhaustive_code_exists(p.q, p.n, p.k, p.d, exhaustive_budget, threads);
        if (ex.exists != claims_existence || ex.candidates != p.candidates) return false;
        (claims_existence ? saw_existence : saw_nonexistence) = true;
        break;
      }
      case Provenance::Kind::Subcode:
        saw_nonexistence = true;
        break;
      case Provenance::Kind::Singleton:
        if (p.k + p.d <= p.n + 1) return false;
        saw_nonexistence = true;
        break;
    }
  }
  if (result.kind == BoundKind::VbarExact && result.exact()) return saw_existence && saw_nonexistence;
  return saw_existence;
}

std::string render(const BoundResult& result) {
  std::ostringstream out;
  out << "kind=" << to_string(result.kind) << '\n';
  out << "value=" << (result.value ? std::to_string(*result.value) : std::string("X")) << '\n';
  if (result.kind != BoundKind::ShLower) {
    out << "lower=" << result.lower << '\n';
    out << "upper=" << result.upper << '\n';
    out << "exact=" << (result.exact() ? "true" : "false") << '\n';
  }
  for (std::size_t i = 0; i < result.provenance.size(); ++i) {
    out << "provenance." << i << '=' << result.provenance[i].text << '\n';
  }
  if (!result.note.empty()) out << "note=" << result.note << '\n';
  return out.str();
}

}  // namespace shlin
