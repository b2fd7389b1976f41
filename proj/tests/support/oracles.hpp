#pragma once

// Naive reference implementations used as test oracles. Nothing here calls
// into the library: vectors are std::vector<int>, field elements are digit
// vectors reduced by schoolbook polynomial division.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

inline std::string fixture(const std::string& name) { return std::string(SHLIN_FIXTURE_DIR) + "/" + name; }

class PolyField {
 public:
  // modulus c_0..c_m (monic); empty for a prime field.
  PolyField(int p, std::vector<int> modulus) : p_(p), mod_(std::move(modulus)) {
    m_ = mod_.empty() ? 1 : static_cast<int>(mod_.size()) - 1;
    q_ = 1;
    for (int i = 0; i < m_; ++i) q_ *= p_;
  }

  int q() const { return q_; }
  int p() const { return p_; }

  std::vector<int> digits(int code) const {
    std::vector<int> d(static_cast<std::size_t>(m_), 0);
    for (int i = 0; i < m_; ++i) {
      d[static_cast<std::size_t>(i)] = code % p_;
      code /= p_;
    }
    return d;
  }

  int code(const std::vector<int>& d) const {
    int c = 0;
    for (int i = m_ - 1; i >= 0; --i) c = c * p_ + d[static_cast<std::size_t>(i)];
    return c;
  }

  int add(int a, int b) const {
    auto x = digits(a);
    auto y = digits(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % p_;
    return code(x);
  }

  int neg(int a) const {
    auto x = digits(a);
    for (int& v : x) v = (p_ - v) % p_;
    return code(x);
  }

  int sub(int a, int b) const { return add(a, neg(b)); }

  int mul(int a, int b) const {
    if (m_ == 1) return (a * b) % p_;
    const auto x = digits(a);
    const auto y = digits(b);
    std::vector<int> prod(static_cast<std::size_t>(2 * m_ - 1), 0);
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < m_; ++j) {
        prod[static_cast<std::size_t>(i + j)] = (prod[static_cast<std::size_t>(i + j)] + x[i] * y[j]) % p_;
      }
    }
    for (int deg = 2 * m_ - 2; deg >= m_; --deg) {
      const int lead = prod[static_cast<std::size_t>(deg)];
      if (lead == 0) continue;
      for (int i = 0; i <= m_; ++i) {
        auto& slot = prod[static_cast<std::size_t>(deg - m_ + i)];
        slot = ((slot - lead * mod_[static_cast<std::size_t>(i)]) % p_ + p_) % p_;
      }
    }
    prod.resize(static_cast<std::size_t>(m_));
    return code(prod);
  }

  int inv(int a) const {
    for (int b = 1; b < q_; ++b) {
      if (mul(a, b) == 1) return b;
    }
    return -1;
  }

 private:
  int p_;
  int m_;
  int q_;
  std::vector<int> mod_;
};

using Vec = std::vector<int>;

inline Vec vadd(const PolyField& f, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

inline Vec vscale(const PolyField& f, int c, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
  return out;
}

inline std::size_t rank(const PolyField& f, std::vector<Vec> rows) {
  std::size_t rk = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rk < rows.size(); ++c) {
    std::size_t piv = rk;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rk], rows[piv]);
    const int inv = f.inv(rows[rk][c]);
    rows[rk] = vscale(f, inv, rows[rk]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rk && rows[i][c] != 0) rows[i] = vadd(f, rows[i], vscale(f, f.neg(rows[i][c]), rows[rk]));
    }
    ++rk;
  }
  return rk;
}

struct Combo {
  std::vector<std::size_t> idx;
  std::vector<int> coef;
  Vec value;
};

// Every canonical h-combination: index tuples in lexicographic order, and for
// each tuple all coefficient tuples with the first term most significant. The
// zero vector only takes coefficient 1; plain mode uses coefficient 1 only.
inline std::vector<Combo> combinations(const PolyField& f, const std::vector<Vec>& a, std::size_t h, bool plain) {
  std::vector<Combo> out;
  const std::size_t r = a.empty() ? 0 : a[0].size();
  std::vector<std::size_t> idx;
  std::function<void(std::size_t)> pick = [&](std::size_t start) {
    if (idx.size() == h) {
      std::vector<int> top;
      for (auto i : idx) {
        const bool is_zero = std::all_of(a[i].begin(), a[i].end(), [](int x) { return x == 0; });
        top.push_back(plain || is_zero ? 1 : f.q() - 1);
      }
      std::vector<int> coef(h, 1);
      while (true) {
        Vec acc(r, 0);
        for (std::size_t j = 0; j < h; ++j) acc = vadd(f, acc, vscale(f, coef[j], a[idx[j]]));
        out.push_back(Combo{idx, coef, acc});
        std::size_t j = h;
        while (j > 0 && coef[j - 1] == top[j - 1]) coef[--j] = 1;
        if (j == 0) break;
        ++coef[j - 1];
      }
      return;
    }
    for (std::size_t i = start; i < a.size(); ++i) {
      idx.push_back(i);
      pick(i + 1);
      idx.pop_back();
    }
  };
  pick(0);
  return out;
}

inline bool all_distinct(const std::vector<Combo>& cs) {
  std::set<Vec> seen;
  for (const auto& c : cs) {
    if (!seen.insert(c.value).second) return false;
  }
  return true;
}

inline std::set<Vec> values(const std::vector<Combo>& cs) {
  std::set<Vec> out;
  for (const auto& c : cs) out.insert(c.value);
  return out;
}

// Smallest number of linearly dependent columns; n+1 when all are independent.
inline int min_dependent_columns(const PolyField& f, const std::vector<Vec>& cols) {
  const std::size_t n = cols.size();
  for (std::size_t d = 1; d <= n; ++d) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(d), true);
    do {
      std::vector<Vec> sub;
      for (std::size_t j = 0; j < n; ++j) {
        if (pick[j]) sub.push_back(cols[j]);
      }
      if (rank(f, sub) < d) return static_cast<int>(d);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return static_cast<int>(n) + 1;
}

// All x in F_q^n with H x^T = 0, by brute force over the whole space.
inline std::set<Vec> kernel_brute(const PolyField& f, const std::vector<Vec>& h_rows, std::size_t n) {
  std::set<Vec> out;
  Vec x(n, 0);
  while (true) {
    bool ok = true;
    for (const Vec& row : h_rows) {
      int s = 0;
      for (std::size_t j = 0; j < n; ++j) s = f.add(s, f.mul(row[j], x[j]));
      if (s != 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(x);
    std::size_t j = 0;
    for (; j < n; ++j) {
      if (++x[j] < f.q()) break;
      x[j] = 0;
    }
    if (j == n) break;
  }
  return out;
}

}  // namespace oracle
