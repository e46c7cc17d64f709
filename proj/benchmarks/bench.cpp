#include <benchmark/benchmark.h>

#include <random>

#include "hg/families.hpp"
#include "hg/io.hpp"
#include "hg/search.hpp"
#include "hg/symbolic.hpp"
#include "hg/validate.hpp"

namespace {

const hg::Rational kR(197, 468);
const hg::Rational kS(7, 156);

void BM_BuildFamilyTable(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(hg::families::build_k_rs(kR, kS));
  }
}
BENCHMARK(BM_BuildFamilyTable);

void BM_Convolve(benchmark::State& state) {
  const hg::Hypergroup h = hg::families::build_k_rs(kR, kS);
  const hg::Measure a = hg::delta(3, 5);
  const hg::Measure b = hg::delta(4, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hg::convolve(h, a, b));
  }
}
BENCHMARK(BM_Convolve);

void BM_CheckAssociativityOrder5(benchmark::State& state) {
  const hg::Hypergroup h = hg::families::build_k_rs(kR, kS);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hg::validation::check_associativity(h));
  }
}
BENCHMARK(BM_CheckAssociativityOrder5);

void BM_ValidateS3(benchmark::State& state) {
  const hg::Hypergroup h =
      hg::families::group_hypergroup(hg::families::symmetric_group_3_table());
  for (auto _ : state) {
    benchmark::DoNotOptimize(hg::validation::validate(h));
  }
}
BENCHMARK(BM_ValidateS3);

void BM_VerifyCatalog(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(hg::symbolic::verify_catalog());
  }
}
BENCHMARK(BM_VerifyCatalog);

void BM_SearchRestartOrder4(benchmark::State& state) {
  hg::search::SearchConfig config;
  config.order = 4;
  config.star = hg::StarInvolution({0, 3, 2, 1});
  config.restarts = 1;
  config.max_iterations = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    config.seed = seed++;
    benchmark::DoNotOptimize(hg::search::feasibility_search(config));
  }
}
BENCHMARK(BM_SearchRestartOrder4)->Arg(200)->Arg(1500);

void BM_SearchRestartOrder5(benchmark::State& state) {
  hg::search::SearchConfig config;
  config.order = 5;
  config.star = hg::StarInvolution({0, 1, 2, 4, 3});
  config.restarts = 1;
  config.max_iterations = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    config.seed = seed++;
    benchmark::DoNotOptimize(hg::search::feasibility_search(config));
  }
}
BENCHMARK(BM_SearchRestartOrder5)->Arg(200)->Arg(1500);

void BM_SerializeParse(benchmark::State& state) {
  const hg::Hypergroup h = hg::families::build_k_rs(kR, kS);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hg::io::parse_document(hg::io::serialize(h)));
  }
}
BENCHMARK(BM_SerializeParse);

}  // namespace

BENCHMARK_MAIN();
