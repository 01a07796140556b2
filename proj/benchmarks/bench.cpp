#include <benchmark/benchmark.h>

#include <parpole/checks.hpp>
#include <parpole/eisenstein.hpp>
#include <parpole/words.hpp>

using namespace parpole;

namespace {

const RootDatum& e8() {
  static const RootDatum rd = build_root_datum({Series::E, 8});
  return rd;
}

void BM_BuildRootDatumE8(benchmark::State& state) {
  for (auto _ : state) {
    RootDatum rd = build_root_datum({Series::E, 8});
    benchmark::DoNotOptimize(rd.pos_roots.size());
  }
}
BENCHMARK(BM_BuildRootDatumE8)->Unit(benchmark::kMillisecond);

void BM_BuildParabolicE8Node4(benchmark::State& state) {
  for (auto _ : state) {
    ParabolicDatum pd = build_parabolic(e8(), 4);
    benchmark::DoNotOptimize(pd.kappa);
  }
}
BENCHMARK(BM_BuildParabolicE8Node4);

void BM_QuotientE7Node4(benchmark::State& state) {
  ParabolicDatum pd = build_parabolic(build_root_datum({Series::E, 7}), 4);
  for (auto _ : state) {
    QuotientStats st = quotient_stats(pd);
    benchmark::DoNotOptimize(st.reps); // 10080
  }
}
BENCHMARK(BM_QuotientE7Node4)->Unit(benchmark::kMillisecond);

void BM_ProfileOfFullE8Node4(benchmark::State& state) {
  ParabolicDatum pd = build_parabolic(e8(), 4);
  InvBits all;
  for (std::size_t i = 0; i < pd.outside.size(); ++i)
    all.set(static_cast<int>(i));
  for (auto _ : state) {
    Profile p = profile_of(pd, all);
    benchmark::DoNotOptimize(p.m.data());
  }
}
BENCHMARK(BM_ProfileOfFullE8Node4);

void BM_PoleLocus(benchmark::State& state) {
  ParabolicDatum pd = build_parabolic(build_root_datum({Series::F, 4}), 2);
  LFactorProduct d = common_denominator(pd);
  LFactorProduct p = mul(d, cw_product(pd, pd.full));
  for (auto _ : state) {
    for (int dprime = 1; dprime <= pd.d0; ++dprime) {
      PoleLocus locus = pole_locus(p, dprime);
      benchmark::DoNotOptimize(locus.entries.size());
    }
  }
}
BENCHMARK(BM_PoleLocus);

void BM_ChecksCombB6Node3(benchmark::State& state) {
  ParabolicDatum pd = build_parabolic(build_root_datum({Series::B, 6}), 3);
  for (auto _ : state) {
    auto reports = run_checks(pd, {"comb-", "comb+", "comb1"});
    benchmark::DoNotOptimize(reports.size());
  }
}
BENCHMARK(BM_ChecksCombB6Node3)->Unit(benchmark::kMillisecond);

void BM_EisensteinPolesD5Node2(benchmark::State& state) {
  ParabolicDatum pd = build_parabolic(build_root_datum({Series::D, 5}), 2);
  for (auto _ : state) {
    PoleReport rep = eisenstein_poles(pd);
    benchmark::DoNotOptimize(rep.entries.size());
  }
}
BENCHMARK(BM_EisensteinPolesD5Node2)->Unit(benchmark::kMillisecond);

void BM_CanonicalWordC12Node6(benchmark::State& state) {
  RootDatum rd = build_root_datum({Series::C, 12});
  for (auto _ : state) {
    ReducedWord w = canonical_w0_word(rd, 6);
    CorootSequenceResult seq = coroot_sequence(w, rd);
    benchmark::DoNotOptimize(seq.reduced);
  }
}
BENCHMARK(BM_CanonicalWordC12Node6);

} // namespace

BENCHMARK_MAIN();
