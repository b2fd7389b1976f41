#include <benchmark/benchmark.h>

#include <random>

#include "shlin/bounds.hpp"
#include "shlin/code.hpp"
#include "shlin/correspond.hpp"
#include "shlin/io.hpp"
#include "shlin/linalg.hpp"
#include "shlin/search.hpp"
#include "shlin/shset.hpp"

namespace {

std::string fixture(const char* name) { return std::string(SHLIN_FIXTURE_DIR) + "/" + name; }

void BM_VerifyH1Columns(benchmark::State& state) {
  const auto code = shlin::LinearCode::from_parity_check(shlin::load_matrix(fixture("h1_f5.mat")));
  const auto set = shlin::code_to_set(code, 3).set;
  for (auto _ : state) benchmark::DoNotOptimize(shlin::is_sh_linear(set));
}
BENCHMARK(BM_VerifyH1Columns);

void BM_MinDistanceH2(benchmark::State& state) {
  const auto code = shlin::LinearCode::from_parity_check(shlin::load_matrix(fixture("h2_f2.mat")));
  for (auto _ : state) benchmark::DoNotOptimize(shlin::compute_min_distance(code));
}
BENCHMARK(BM_MinDistanceH2);

void BM_MinDistanceH1(benchmark::State& state) {
  const auto code = shlin::LinearCode::from_parity_check(shlin::load_matrix(fixture("h1_f5.mat")));
  for (auto _ : state) benchmark::DoNotOptimize(shlin::compute_min_distance(code));
}
BENCHMARK(BM_MinDistanceH1);

void BM_SearchF2(benchmark::State& state) {
  const auto f2 = shlin::make_field(2);
  const auto r = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(shlin::exhaustive_max_sh_set(f2, r, 2, false));
}
BENCHMARK(BM_SearchF2)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Rref(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const auto f = shlin::make_field_of_order(q);
  std::mt19937_64 rng(1);
  std::vector<shlin::Elem> e(64 * 64);
  for (auto& x : e) x = static_cast<shlin::Elem>(rng() % static_cast<unsigned>(q));
  const shlin::FqMatrix m(f, 64, 64, e);
  for (auto _ : state) benchmark::DoNotOptimize(shlin::rref(m));
}
BENCHMARK(BM_Rref)->Arg(2)->Arg(5)->Arg(16);

void BM_ExhaustiveCodeExists(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(shlin::exhaustive_code_exists(2, 8, 3, 5, 1'000'000, 1));
}
BENCHMARK(BM_ExhaustiveCodeExists)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
