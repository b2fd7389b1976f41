#include "shlin/correspond.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "incremental_table.hpp"
#include "shlin/error.hpp"

namespace shlin {

bool CorrespondenceReport::valid() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void CorrespondenceReport::add_field(std::string key, std::string value) {
  fields.emplace_back(std::move(key), std::move(value));
}

void CorrespondenceReport::add_check(std::string name, bool passed, std::string detail) {
  checks.push_back(Check{std::move(name), passed, std::move(detail)});
}

std::string CorrespondenceReport::render() const {
  std::ostringstream out;
  out << "direction=" << direction << '\n';
  for (const auto& [k, v] : fields) out << k << '=' << v << '\n';
  for (const Check& c : checks) {
    out << "check." << c.name << '=' << (c.passed ? "pass" : "fail") << '\n';
    if (!c.detail.empty()) out << "check." << c.name << ".detail=" << c.detail << '\n';
  }
  out << "valid=" << (valid() ? "true" : "false") << '\n';
  return out.str();
}

namespace {

std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string distance_text(int d) { return d == kInfiniteDistance ? "inf" : std::to_string(d); }

}  // namespace

SetFromCode code_to_set(const LinearCode& code, std::size_t h) {
  if (h == 0) throw Error(ErrorCode::InvalidArgument, "h must be >= 1");
  const std::size_t n = code.n();
  const std::size_t r = n - code.k();
  if (r < 2 * h) throw Error(ErrorCode::RedundancyTooSmall, "n-k = " + std::to_string(r) + " < 2h");

  const auto cols = code.parity_check().col_vectors();
  std::map<FqVector, std::size_t> seen;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].is_zero()) throw Error(ErrorCode::DuplicateColumns, "column " + std::to_string(j) + " is zero");
    auto [it, inserted] = seen.emplace(cols[j], j);
    if (!inserted) {
      throw Error(ErrorCode::DuplicateColumns,
                  "columns " + std::to_string(it->second) + " and " + std::to_string(j) + " coincide");
    }
  }

  const int need = static_cast<int>(2 * h + 1);
  std::string distance_source;
  if (code.d_known()) {
    if (*code.d_known() < need) {
      throw Error(ErrorCode::DistanceTooSmall, "d = " + distance_text(*code.d_known()) + " < 2h+1");
    }
    distance_source = "d=" + distance_text(*code.d_known());
  } else if (code.d_lower() >= need) {
    distance_source = "d>=" + std::to_string(code.d_lower());
  } else {
    const DistanceCheck check = min_distance_at_least(code, need);
    if (!check) {
      throw Error(ErrorCode::DistanceTooSmall, "columns {" + join(check.dependent_columns) + "} are dependent");
    }
    distance_source = "certified d>=" + std::to_string(need);
  }

  std::vector<FqVector> elems = cols;
  elems.emplace_back(code.field_ptr(), r);
  ShSetCandidate set(code.field_ptr(), r, std::move(elems), h);

  CorrespondenceReport report;
  report.direction = "code->set";
  report.add_field("q", std::to_string(code.field().q()));
  report.add_field("n", std::to_string(n));
  report.add_field("k", std::to_string(code.k()));
  report.add_field("h", std::to_string(h));
  report.add_field("r", std::to_string(r));
  report.add_field("set_size", std::to_string(set.size()));
  report.add_check("redundancy", true, "n-k=" + std::to_string(r));
  report.add_check("distinct_nonzero_columns", true);
  report.add_check("distance", true, distance_source);
  const Verdict verdict = is_sh_linear(set);
  report.add_check("sh_linear", verdict.ok());
  if (!verdict) throw Error(ErrorCode::NotShLinear, "column set failed verification:\n" + report.render());
  return SetFromCode{std::move(set), std::move(report)};
}

CodeFromSet set_to_code(const ShSetCandidate& a) {
  const std::size_t h = a.h();
  if (!is_sh_linear(a)) throw Error(ErrorCode::NotShLinear, "input is not S_h-linear");
  if (a.r() < 2 * h) throw Error(ErrorCode::PreconditionViolated, "requires r >= 2h");

  std::string zero_handling;
  std::optional<ShSetCandidate> working;
  if (a.contains_zero()) {
    zero_handling = "present";
    working = a;
  } else if (ShSetCandidate with_zero = adjoin_zero(a); a.size() >= h && is_sh_linear(with_zero)) {
    zero_handling = "adjoined";
    working = std::move(with_zero);
  } else if (a.field().q() == 2 && a.size() > 0) {
    zero_handling = "translated";
    working = translate_scale(a, a[0], 1);
  } else {
    throw Error(ErrorCode::PreconditionViolated, "A with 0 adjoined is not S_h-linear and q != 2");
  }

  std::vector<FqVector> nonzero;
  for (const FqVector& v : working->elems()) {
    if (!v.is_zero()) nonzero.push_back(v);
  }
  std::sort(nonzero.begin(), nonzero.end());
  const std::size_t n = nonzero.size();
  const std::size_t r = a.r();
  if (n < 2 * h) throw Error(ErrorCode::PreconditionViolated, "requires at least 2h nonzero elements");

  FqMatrix pchk = FqMatrix::from_cols(a.field_ptr(), r, nonzero);
  LinearCode code = LinearCode::from_parity_check(pchk);
  const std::size_t t = code.k();

  const int need = static_cast<int>(2 * h + 1);
  const DistanceCheck dist = min_distance_at_least(code, need);
  if (!dist) {
    throw Error(ErrorCode::DistanceTooSmall,
                "rebuilt code has dependent columns {" + join(dist.dependent_columns) + "}");
  }
  code.record_lower_bound(need);

  const std::size_t lo = n > r ? n - r : 0;
  const std::size_t hi = n - 2 * h;
  const bool in_window = lo <= t && t <= hi;

  CorrespondenceReport report;
  report.direction = "set->code";
  report.add_field("q", std::to_string(a.field().q()));
  report.add_field("set_size", std::to_string(a.size()));
  report.add_field("r", std::to_string(r));
  report.add_field("h", std::to_string(h));
  report.add_field("zero", zero_handling);
  report.add_field("n", std::to_string(n));
  report.add_field("k", std::to_string(t));
  report.add_field("rank", std::to_string(n - t));
  report.add_check("sh_linear", true);
  report.add_check("distance", true, "d>=" + std::to_string(need));
  report.add_check("dimension_window", in_window,
                   std::to_string(lo) + "<=" + std::to_string(t) + "<=" + std::to_string(hi));
  if (!in_window) throw Error(ErrorCode::DimensionWindowViolated, report.render());
  return CodeFromSet{std::move(code), std::move(pchk), std::move(*working), std::move(report)};
}

Extension extend_to_maximal(const ShSetCandidate& a) {
  if (a.size() >= a.h() && !is_sh_linear(a)) throw Error(ErrorCode::NotShLinear, "input is not S_h-linear");
  detail::IncrementalTable table(a.field_ptr(), a.r(), a.h(), CombinationMode::Linear);
  for (const FqVector& v : a.elems()) {
    if (!table.try_add(v.encode())) throw Error(ErrorCode::NotShLinear, "input is not S_h-linear");
  }
  std::vector<FqVector> elems = a.elems();
  std::size_t added = 0;
  for (std::uint64_t x = 0; x < table.space_size(); ++x) {
    if (table.try_add(x)) {
      elems.push_back(FqVector::decode(a.field_ptr(), a.r(), x));
      ++added;
    }
  }
  ShSetCandidate m(a.field_ptr(), a.r(), std::move(elems), a.h());

  CorrespondenceReport report;
  report.direction = "extend";
  report.add_field("q", std::to_string(a.field().q()));
  report.add_field("r", std::to_string(a.r()));
  report.add_field("h", std::to_string(a.h()));
  report.add_field("input_size", std::to_string(a.size()));
  report.add_field("output_size", std::to_string(m.size()));
  report.add_field("added", std::to_string(added));

  const bool large_enough = 2 * a.h() < a.r() && a.r() <= m.size();
  if (large_enough) {
    const bool has_basis = extract_basis(m.elems()).size() == a.r();
    report.add_check("contains_basis", has_basis);
    if (a.field().q() != 2) report.add_check("contains_zero", m.contains_zero());
  }
  return Extension{std::move(m), added, std::move(report)};
}

RoundTrip round_trip_check(const LinearCode& code, std::size_t h, std::uint64_t budget) {
  SetFromCode forward = code_to_set(code, h);
  CodeFromSet back = set_to_code(forward.set);

  const auto original_cols = code.parity_check().col_vectors();
  std::map<FqVector, std::size_t> where;
  for (std::size_t j = 0; j < original_cols.size(); ++j) where.emplace(original_cols[j], j);

  RoundTrip out;
  const auto rebuilt_cols = back.pchk.col_vectors();
  for (const FqVector& c : rebuilt_cols) {
    auto it = where.find(c);
    if (it == where.end()) throw Error(ErrorCode::InvalidArgument, "rebuilt column not found in the original matrix");
    out.permutation.push_back(it->second);
  }

  const bool same_n = back.code.n() == code.n();
  const bool same_k = back.code.k() == code.k();
  bool same_words = false;
  if (same_n && same_k) {
    std::set<FqVector> original;
    for (FqVector& w : code.codewords(budget)) original.insert(std::move(w));
    std::set<FqVector> rebuilt;
    for (const FqVector& w : back.code.codewords(budget)) {
      FqVector mapped(code.field_ptr(), code.n());
      for (std::size_t j = 0; j < w.dim(); ++j) mapped.set(out.permutation[j], w[j]);
      rebuilt.insert(std::move(mapped));
    }
    same_words = original == rebuilt;
  }
  out.same_code = same_n && same_k && same_words;

  out.report.direction = "round-trip";
  out.report.add_field("q", std::to_string(code.field().q()));
  out.report.add_field("h", std::to_string(h));
  out.report.add_field("n", std::to_string(code.n()));
  out.report.add_field("k", std::to_string(code.k()));
  out.report.add_field("rebuilt_n", std::to_string(back.code.n()));
  out.report.add_field("rebuilt_k", std::to_string(back.code.k()));
  out.report.add_field("permutation", join(out.permutation));
  for (const Check& c : forward.report.checks) out.report.add_check("forward." + c.name, c.passed, c.detail);
  for (const Check& c : back.report.checks) out.report.add_check("converse." + c.name, c.passed, c.detail);
  out.report.add_check("same_length", same_n);
  out.report.add_check("same_dimension", same_k);
  out.report.add_check("same_codewords", same_words);
  return out;
}

}  // namespace shlin
