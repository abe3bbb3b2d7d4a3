#include <benchmark/benchmark.h>

#include "k2forge/families/families.hpp"
#include "k2forge/kernels/batch.hpp"
#include "k2forge/kernels/contour.hpp"

using namespace k2forge;

namespace {

const CurveRecord& ct0() {
  static const CurveRecord rec = gen_quartic_ct(Rat(0));
  return rec;
}

const Window kWin{-0.6, 0.4, -0.6, 0.2};

std::vector<VerifyJob> jobs() {
  static const std::vector<VerifyJob> js = [] {
    std::vector<VerifyJob> out;
    for (const CurveRecord& rec : {gen_quartic_ct(Rat(0)), gen_quartic_conic_pq(Rat(1, 2), Rat(-1)),
                                   gen_hyp_odd(2, {Rat(1), Rat(1, 2), Rat(1, 4)})})
      for (const auto& e : rec.elements) out.push_back({rec.curve, e.element});
    return out;
  }();
  return js;
}

void BM_grid_serial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(evaluate_grid_serial(ct0().curve.poly(), kWin, s.range(0)));
}
void BM_grid_omp(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(evaluate_grid_omp(ct0().curve.poly(), kWin, s.range(0)));
}
void BM_march_serial(benchmark::State& s) {
  GridValues g = evaluate_grid_serial(ct0().curve.poly(), kWin, s.range(0));
  for (auto _ : s) benchmark::DoNotOptimize(marching_squares_serial(g));
}
void BM_march_omp(benchmark::State& s) {
  GridValues g = evaluate_grid_serial(ct0().curve.poly(), kWin, s.range(0));
  for (auto _ : s) benchmark::DoNotOptimize(marching_squares_omp(g));
}
void BM_verify_serial(benchmark::State& s) {
  auto js = jobs();
  for (auto _ : s) benchmark::DoNotOptimize(batch_verify_serial(js));
}
void BM_verify_omp(benchmark::State& s) {
  auto js = jobs();
  for (auto _ : s) benchmark::DoNotOptimize(batch_verify_omp(js));
}

}  // namespace

BENCHMARK(BM_grid_serial)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_grid_omp)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_march_serial)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_march_omp)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_omp)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
