#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "shlin/bounds.hpp"
#include "shlin/code.hpp"
#include "shlin/correspond.hpp"
#include "shlin/error.hpp"
#include "shlin/io.hpp"
#include "shlin/search.hpp"

namespace shlin::cli {

namespace {

// Fields shared by the subcommands. Only the ones a subcommand declares are
// meaningful after parsing.
struct RunConfig {
  unsigned threads = 0;
  std::string set_path;
  std::string matrix_path;
  std::string out_path;
  std::string role = "parity";
  std::string mode = "linear";
  std::string snapshot;
  std::size_t h = 0;
  int q = 0;
  std::size_t r = 0;
  int n = 0;
  int at_least = 0;
  bool zero = false;
  bool exact = false;
  std::uint64_t budget = kDefaultCodewordBudget;
  std::uint64_t exhaustive_budget = 1'000'000;
  int h_min = 2;
  int h_max = 2;
  int r_min = 4;
  int r_max = 10;
  int n_min = 5;
  int n_max = 20;
  std::uint64_t seed = 1;
  int trials = 200;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotShLinear:
    case ErrorCode::DistanceTooSmall:
    case ErrorCode::DuplicateColumns:
    case ErrorCode::RedundancyTooSmall:
    case ErrorCode::NoWitness:
    case ErrorCode::DimensionWindowViolated:
    case ErrorCode::PreconditionViolated:
    case ErrorCode::SingletonViolation:
      return 1;
    default:
      return 2;
  }
}

CombinationMode parse_mode(const std::string& m) {
  return m == "plain" ? CombinationMode::Plain : CombinationMode::Linear;
}

ShSetCandidate load_candidate(const RunConfig& cfg) {
  VectorList list = load_set(cfg.set_path);
  return ShSetCandidate(list.field, list.r, std::move(list.vectors), cfg.h);
}

std::vector<CodeTableEntry> load_snapshot(const RunConfig& cfg) {
  return ingest_table_file(cfg.snapshot.empty() ? default_snapshot_path() : cfg.snapshot);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  f << text;
}

void print_witness(std::ostream& out, const CollisionWitness& w) {
  const std::string value = format_vector(w.value);
  out << format_combination(w.lhs) << " = " << value << '\n';
  out << format_combination(w.rhs) << " = " << value << '\n';
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  const ShSetCandidate a = load_candidate(cfg);
  const Verdict v = verify(a, parse_mode(cfg.mode));
  if (v) {
    out << "OK\n";
    return 0;
  }
  print_witness(out, *v.witness);
  return 1;
}

int run_hspan(const RunConfig& cfg, std::ostream& out) {
  const ShSetCandidate a = load_candidate(cfg);
  const auto span = h_span(a, parse_mode(cfg.mode));
  out << "count=" << count_h_combinations(a, parse_mode(cfg.mode)) << '\n';
  out << "size=" << span.size() << '\n';
  if (!cfg.out_path.empty()) {
    save_set(cfg.out_path, a.field(), a.r(), span);
  } else {
    for (const FqVector& v : span) out << format_vector(v) << '\n';
  }
  return 0;
}

LinearCode load_code(const RunConfig& cfg) {
  const FqMatrix m = load_matrix(cfg.matrix_path);
  return cfg.role == "generator" ? LinearCode::from_generator(m) : LinearCode::from_parity_check(m);
}

int run_mindist(const RunConfig& cfg, std::ostream& out) {
  LinearCode code = load_code(cfg);
  out << "n=" << code.n() << '\n' << "k=" << code.k() << '\n';
  if (cfg.at_least > 0) {
    const DistanceCheck check = min_distance_at_least(code, cfg.at_least);
    out << "d>=" << cfg.at_least << ": " << (check ? "true" : "false") << '\n';
    if (!check) {
      out << "columns=";
      for (std::size_t i = 0; i < check.dependent_columns.size(); ++i) {
        out << (i ? "," : "") << check.dependent_columns[i];
      }
      out << '\n';
      return 1;
    }
    return 0;
  }
  const int d = min_distance(code, cfg.budget, cfg.threads);
  out << "d=" << (d == kInfiniteDistance ? 0 : d) << '\n';
  return 0;
}

int run_to_set(const RunConfig& cfg, std::ostream& out) {
  const LinearCode code = load_code(cfg);
  const SetFromCode result = code_to_set(code, cfg.h);
  if (!cfg.out_path.empty()) save_set(cfg.out_path, result.set.field(), result.set.r(), result.set.elems());
  out << result.report.render();
  return result.report.valid() ? 0 : 1;
}

int run_to_code(const RunConfig& cfg, std::ostream& out) {
  const ShSetCandidate a = load_candidate(cfg);
  const CodeFromSet result = set_to_code(a);
  if (!cfg.out_path.empty()) save_matrix(cfg.out_path, result.pchk);
  out << result.report.render();
  return result.report.valid() ? 0 : 1;
}

int run_extend(const RunConfig& cfg, std::ostream& out) {
  const ShSetCandidate a = load_candidate(cfg);
  const Extension result = extend_to_maximal(a);
  if (!cfg.out_path.empty()) save_set(cfg.out_path, result.set.field(), result.set.r(), result.set.elems());
  out << result.report.render();
  return result.report.valid() ? 0 : 1;
}

int run_search(const RunConfig& cfg, std::ostream& out) {
  const FieldPtr field = make_field_of_order(cfg.q);
  const SearchResult result =
      exhaustive_max_sh_set(field, cfg.r, cfg.h, cfg.zero, parse_mode(cfg.mode), cfg.threads);
  out << "max_size=" << result.max_size << '\n' << "nodes=" << result.nodes << '\n';
  if (!cfg.out_path.empty()) {
    save_set(cfg.out_path, *field, cfg.r, result.witness);
  } else {
    for (const FqVector& v : result.witness) out << format_vector(v) << '\n';
  }
  return 0;
}

int run_bounds_vbar(const RunConfig& cfg, std::ostream& out) {
  const auto entries = load_snapshot(cfg);
  const int h = static_cast<int>(cfg.h);
  const BoundResult b = cfg.exact ? vbar_exact(entries, cfg.q, h, cfg.n, cfg.exhaustive_budget, cfg.threads)
                                  : vbar_upper(entries, cfg.q, h, cfg.n);
  out << render(b);
  if (cfg.exact) out << "log_q_B=" << (b.value ? std::to_string(cfg.n - *b.value) : std::string("X")) << '\n';
  return 0;
}

int run_bounds_table(const RunConfig& cfg, std::ostream& out) {
  const auto entries = load_snapshot(cfg);
  const std::string csv = emit_table(entries, cfg.q, cfg.h_min, cfg.h_max, cfg.r_min, cfg.r_max);
  if (cfg.out_path.empty()) {
    out << csv;
  } else {
    write_text(cfg.out_path, csv);
  }
  return 0;
}

int run_bounds_figure(const RunConfig& cfg, std::ostream& out) {
  const auto entries = load_snapshot(cfg);
  const int h = static_cast<int>(cfg.h);
  const std::string csv =
      emit_vbar_series(entries, cfg.q, h, cfg.n_min, cfg.n_max, cfg.exact, cfg.exhaustive_budget, cfg.threads);
  if (cfg.out_path.empty()) {
    out << csv;
  } else {
    write_text(cfg.out_path, csv);
  }
  if (cfg.exact) {
    for (const std::string& v : step_violations(entries, cfg.q, h, cfg.n_min, cfg.n_max, cfg.exhaustive_budget)) {
      out << "step_violation=" << v << '\n';
    }
  }
  return 0;
}

int run_bounds_ingest(const RunConfig& cfg, std::ostream& out) {
  const auto entries = load_snapshot(cfg);
  std::set<int> fields;
  for (const auto& e : entries) fields.insert(e.q);
  out << "entries=" << entries.size() << '\n' << "fields=";
  bool first = true;
  for (int q : fields) {
    out << (first ? "" : ",") << q;
    first = false;
  }
  out << '\n';
  return 0;
}

ShSetCandidate random_candidate(std::mt19937_64& rng, int q, std::size_t r, std::size_t size, std::size_t h,
                                bool with_zero) {
  const FieldPtr f = make_field_of_order(q);
  std::uniform_int_distribution<int> digit(0, q - 1);
  std::set<std::vector<Elem>> seen;
  std::vector<FqVector> elems;
  if (with_zero) {
    seen.insert(std::vector<Elem>(r, 0));
    elems.emplace_back(f, r);
  }
  while (elems.size() < size) {
    std::vector<Elem> c(r);
    for (auto& x : c) x = static_cast<Elem>(digit(rng));
    if (seen.insert(c).second) elems.emplace_back(f, std::move(c));
  }
  std::shuffle(elems.begin(), elems.end(), rng);
  return ShSetCandidate(f, r, std::move(elems), h);
}

int run_selftest(const RunConfig& cfg, std::ostream& out) {
  std::mt19937_64 rng(cfg.seed);
  const int qs[] = {2, 3, 5};
  int counting_fail = 0;
  int binary_fail = 0;
  int bound_fail = 0;
  int verified = 0;
  for (int t = 0; t < cfg.trials; ++t) {
    const int q = qs[rng() % 3];
    const std::size_t r = 2 + rng() % 3;
    const std::size_t h = 2 + rng() % 2;
    const auto space = static_cast<std::size_t>(std::pow(q, static_cast<double>(r)));
    const std::size_t size = std::min(space, h + rng() % (8 - h));
    const bool with_zero = rng() % 2 == 0;
    const ShSetCandidate a = random_candidate(rng, q, r, size, h, with_zero);
    const bool ok = is_sh_linear(a).ok();
    if (ok != (h_span(a).size() == count_h_combinations(a))) ++counting_fail;
    if (q == 2 && ok != is_sh_set(a).ok()) ++binary_fail;
    if (ok) {
      ++verified;
      if (!(static_cast<double>(a.size()) < size_bound(q, r, h, a.contains_zero()))) ++bound_fail;
    }
  }
  out << "seed=" << cfg.seed << '\n' << "trials=" << cfg.trials << '\n' << "verified=" << verified << '\n';
  out << "counting_law=" << (counting_fail ? "fail" : "pass") << '\n';
  out << "binary_equivalence=" << (binary_fail ? "fail" : "pass") << '\n';
  out << "size_bound=" << (bound_fail ? "fail" : "pass") << '\n';
  return counting_fail || binary_fail || bound_fail ? 1 : 0;
}

}  // namespace

std::string default_snapshot_path() {
  if (const char* env = std::getenv("SHLIN_SNAPSHOT"); env && *env) return env;
  return SHLIN_DEFAULT_SNAPSHOT;
}

std::string format_combination(const HCombination& c) {
  std::string s;
  for (std::size_t i = 0; i < c.terms.size(); ++i) {
    if (i) s += " + ";
    s += std::to_string(static_cast<int>(c.terms[i].coef)) + "*" + std::to_string(c.terms[i].index);
  }
  return s;
}

std::string format_vector(const FqVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) s += ' ';
    s += std::to_string(static_cast<int>(v[i]));
  }
  return s;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"S_h-linear sets and linear codes over finite fields", "shlin"};
  // `--h` is the combination length everywhere, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", cfg.threads, "Worker threads (0 = available parallelism)");

  const auto existing = CLI::ExistingFile;
  auto modes = CLI::IsMember({"linear", "plain"});

  auto* verify_cmd = app.add_subcommand("verify", "Check whether a set is S_h-linear (or S_h in plain mode)");
  verify_cmd->add_option("--set", cfg.set_path, "Set file")->required()->check(existing);
  verify_cmd->add_option("--h", cfg.h, "Combination length")->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--mode", cfg.mode, "linear or plain")->check(modes);

  auto* hspan_cmd = app.add_subcommand("hspan", "Values of all h-combinations");
  hspan_cmd->add_option("--set", cfg.set_path, "Set file")->required()->check(existing);
  hspan_cmd->add_option("--h", cfg.h, "Combination length")->required()->check(CLI::PositiveNumber);
  hspan_cmd->add_option("--mode", cfg.mode, "linear or plain")->check(modes);
  hspan_cmd->add_option("--out", cfg.out_path, "Write the values as a set file");

  auto* mindist_cmd = app.add_subcommand("mindist", "Minimum distance of a code");
  mindist_cmd->add_option("--matrix", cfg.matrix_path, "Matrix file")->required()->check(existing);
  mindist_cmd->add_option("--role", cfg.role, "parity or generator")->check(CLI::IsMember({"parity", "generator"}));
  mindist_cmd->add_option("--at-least", cfg.at_least, "Only check d >= D")->check(CLI::PositiveNumber);
  mindist_cmd->add_option("--budget", cfg.budget, "Maximum number of codewords to enumerate");

  auto* to_set_cmd = app.add_subcommand("to-set", "Parity-check columns plus zero as an S_h-linear set");
  to_set_cmd->add_option("--matrix", cfg.matrix_path, "Matrix file")->required()->check(existing);
  to_set_cmd->add_option("--role", cfg.role, "parity or generator")->check(CLI::IsMember({"parity", "generator"}));
  to_set_cmd->add_option("--h", cfg.h, "Combination length")->required()->check(CLI::PositiveNumber);
  to_set_cmd->add_option("--out", cfg.out_path, "Output set file");

  auto* to_code_cmd = app.add_subcommand("to-code", "Parity-check matrix from an S_h-linear set");
  to_code_cmd->add_option("--set", cfg.set_path, "Set file")->required()->check(existing);
  to_code_cmd->add_option("--h", cfg.h, "Combination length")->required()->check(CLI::PositiveNumber);
  to_code_cmd->add_option("--out", cfg.out_path, "Output matrix file");

  auto* extend_cmd = app.add_subcommand("extend", "Greedy extension to a maximal S_h-linear set");
  extend_cmd->add_option("--set", cfg.set_path, "Set file")->required()->check(existing);
  extend_cmd->add_option("--h", cfg.h, "Combination length")->required()->check(CLI::PositiveNumber);
  extend_cmd->add_option("--out", cfg.out_path, "Output set file");

  auto* search_cmd = app.add_subcommand("search-max", "Exhaustive maximum S_h-linear set in F_q^r");
  search_cmd->add_option("--q", cfg.q, "Field order")->required();
  search_cmd->add_option("--r", cfg.r, "Dimension")->required();
  search_cmd->add_option("--h", cfg.h, "Combination length")->required()->check(CLI::PositiveNumber);
  search_cmd->add_flag("--zero", cfg.zero, "Require the zero vector");
  search_cmd->add_option("--mode", cfg.mode, "linear or plain")->check(modes);
  search_cmd->add_option("--out", cfg.out_path, "Output set file");

  auto* bounds_cmd = app.add_subcommand("bounds", "Bounds from a code-parameter snapshot");
  bounds_cmd->require_subcommand(1);
  bounds_cmd->fallthrough();
  bounds_cmd->add_option("--snapshot", cfg.snapshot, "Snapshot CSV (default: $SHLIN_SNAPSHOT)")->check(existing);

  auto* vbar_cmd = bounds_cmd->add_subcommand("vbar", "Upper bound or exact value of V_q(h,n)");
  vbar_cmd->add_option("--q", cfg.q, "Field order")->required();
  vbar_cmd->add_option("--h", cfg.h, "Combination length")->required()->check(CLI::PositiveNumber);
  vbar_cmd->add_option("--n", cfg.n, "Code length")->required();
  vbar_cmd->add_flag("--exact", cfg.exact, "Add nonexistence evidence");
  vbar_cmd->add_option("--budget", cfg.exhaustive_budget, "Exhaustive search budget (candidate codes)");

  auto* table_cmd = bounds_cmd->add_subcommand("table", "Grid of lower bounds on the largest S_h-linear set");
  table_cmd->add_option("--q", cfg.q, "Field order")->required();
  table_cmd->add_option("--h-min", cfg.h_min, "Smallest h");
  table_cmd->add_option("--h-max", cfg.h_max, "Largest h");
  table_cmd->add_option("--r-min", cfg.r_min, "Smallest r");
  table_cmd->add_option("--r-max", cfg.r_max, "Largest r");
  table_cmd->add_option("--out", cfg.out_path, "Output CSV");

  auto* ingest_cmd = bounds_cmd->add_subcommand("ingest", "Validate a snapshot");
  ingest_cmd->add_option("--file", cfg.snapshot, "Snapshot CSV")->check(existing);

  auto* figure_cmd = bounds_cmd->add_subcommand("figure", "V_q(h,n) series across n as CSV");
  figure_cmd->add_option("--q", cfg.q, "Field order")->required();
  figure_cmd->add_option("--h", cfg.h, "Combination length")->required()->check(CLI::PositiveNumber);
  figure_cmd->add_option("--n-min", cfg.n_min, "Smallest n");
  figure_cmd->add_option("--n-max", cfg.n_max, "Largest n");
  figure_cmd->add_flag("--exact", cfg.exact, "Add nonexistence evidence");
  figure_cmd->add_option("--budget", cfg.exhaustive_budget, "Exhaustive search budget (candidate codes)");
  figure_cmd->add_option("--out", cfg.out_path, "Output CSV");

  auto* selftest_cmd = app.add_subcommand("selftest", "Randomized property checks");
  selftest_cmd->add_option("--seed", cfg.seed, "RNG seed");
  selftest_cmd->add_option("--trials", cfg.trials, "Number of random candidates")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 2;
  }

  try {
    if (verify_cmd->parsed()) return run_verify(cfg, out);
    if (hspan_cmd->parsed()) return run_hspan(cfg, out);
    if (mindist_cmd->parsed()) return run_mindist(cfg, out);
    if (to_set_cmd->parsed()) return run_to_set(cfg, out);
    if (to_code_cmd->parsed()) return run_to_code(cfg, out);
    if (extend_cmd->parsed()) return run_extend(cfg, out);
    if (search_cmd->parsed()) return run_search(cfg, out);
    if (vbar_cmd->parsed()) return run_bounds_vbar(cfg, out);
    if (table_cmd->parsed()) return run_bounds_table(cfg, out);
    if (ingest_cmd->parsed()) return run_bounds_ingest(cfg, out);
    if (figure_cmd->parsed()) return run_bounds_figure(cfg, out);
    if (selftest_cmd->parsed()) return run_selftest(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return 2;
}

}  // namespace shlin::cli
