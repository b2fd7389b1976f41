#pragma once

#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "shlin/error.hpp"
#include "shlin/gf.hpp"
#include "shlin/io.hpp"
#include "shlin/linalg.hpp"
#include "shlin/shset.hpp"

namespace testutil {

inline oracle::PolyField oracle_of(const shlin::Field& f) { return oracle::PolyField(f.p(), f.m() == 1 ? std::vector<int>{} : f.modulus()); }

inline oracle::Vec to_vec(const shlin::FqVector& v) {
  oracle::Vec out;
  for (auto e : v.coords()) out.push_back(e);
  return out;
}

inline shlin::FqVector from_vec(const shlin::FieldPtr& f, const oracle::Vec& v) {
  std::vector<shlin::Elem> c;
  for (int x : v) c.push_back(static_cast<shlin::Elem>(x));
  return shlin::FqVector(f, std::move(c));
}

inline std::vector<oracle::Vec> to_vecs(const std::vector<shlin::FqVector>& vs) {
  std::vector<oracle::Vec> out;
  for (const auto& v : vs) out.push_back(to_vec(v));
  return out;
}

inline shlin::ShSetCandidate load_fixture_set(const std::string& name, std::size_t h) {
  auto list = shlin::load_set(oracle::fixture(name));
  return shlin::ShSetCandidate(list.field, list.r, std::move(list.vectors), h);
}

inline shlin::FqMatrix load_fixture_matrix(const std::string& name) { return shlin::load_matrix(oracle::fixture(name)); }

inline shlin::FqVector vec(const shlin::FieldPtr& f, std::vector<int> coords) {
  std::vector<shlin::Elem> c;
  for (int x : coords) c.push_back(static_cast<shlin::Elem>(x));
  return shlin::FqVector(f, std::move(c));
}

// Distinct uniformly drawn vectors of F_q^r; zero is first when requested and
// excluded otherwise.
inline std::vector<shlin::FqVector> random_vectors(std::mt19937_64& rng, const shlin::FieldPtr& f, std::size_t r,
                                                   std::size_t count, bool with_zero) {
  std::uniform_int_distribution<int> digit(0, f->q() - 1);
  std::set<shlin::FqVector> seen;
  std::vector<shlin::FqVector> out;
  shlin::FqVector zero(f, r);
  if (with_zero) {
    out.push_back(zero);
    seen.insert(zero);
  }
  while (out.size() < count) {
    std::vector<shlin::Elem> c(r);
    for (auto& x : c) x = static_cast<shlin::Elem>(digit(rng));
    shlin::FqVector v(f, std::move(c));
    if (!with_zero && v.is_zero()) continue;
    if (seen.insert(v).second) out.push_back(std::move(v));
  }
  return out;
}

template <class F>
std::optional<shlin::ErrorCode> error_code(F&& f) {
  try {
    f();
  } catch (const shlin::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace testutil
