#include <benchmark/benchmark.h>

#include "ecperiods/agm.hpp"
#include "ecperiods/cnum.hpp"
#include "ecperiods/curve.hpp"
#include "ecperiods/elog.hpp"
#include "ecperiods/periods.hpp"
#include "ecperiods/precision.hpp"
#include "ecperiods/weierstrass.hpp"

using namespace ecp;

namespace {

CurveRoots sample_roots(const PrecisionContext& ctx) {
  return {parse_cnum("3-2i", ctx), parse_cnum("1+i", ctx), parse_cnum("-4+1i", ctx)};
}

void bm_agm_optimal(benchmark::State& state) {
  PrecisionContext ctx = make_context(state.range(0));
  CNum a = parse_cnum("1", ctx);
  CNum b(sqrt(Real(2L, ctx.work_bits)), Real(0L, ctx.work_bits));
  for (auto _ : state) {
    AgmResult r = agm_optimal({a, b}, ctx);
    benchmark::DoNotOptimize(r.m);
  }
}
BENCHMARK(bm_agm_optimal)->Arg(100)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);

void bm_period_basis(benchmark::State& state) {
  PrecisionContext ctx = make_context(state.range(0));
  CurveRoots r = sample_roots(ctx);
  for (auto _ : state) {
    PeriodTriple pt = period_basis(r, ctx);
    benchmark::DoNotOptimize(pt.w1);
  }
}
BENCHMARK(bm_period_basis)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

void bm_wp(benchmark::State& state) {
  PrecisionContext ctx = make_context(state.range(0));
  CurveRoots r = sample_roots(ctx);
  PeriodTriple pt = period_basis(r, ctx);
  CNum z = parse_cnum("-0.72212997914002299126+0.01717122412650902249i", ctx);
  for (auto _ : state) {
    WpValue v = wp(z, pt.lattice, ctx);
    benchmark::DoNotOptimize(v.p);
  }
}
BENCHMARK(bm_wp)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

void bm_elog(benchmark::State& state) {
  PrecisionContext ctx = make_context(state.range(0));
  CurveRoots r = sample_roots(ctx);
  Point p = Point::affine(parse_cnum("2-1i", ctx), parse_cnum("8+4i", ctx));
  for (auto _ : state) {
    ElogResult res = elog(r, p, ctx);
    benchmark::DoNotOptimize(res.z);
  }
}
BENCHMARK(bm_elog)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

void bm_elog_real(benchmark::State& state) {
  PrecisionContext ctx = make_context(state.range(0));
  mpfr_prec_t p = ctx.work_bits;
  Real e1(2L, p), e2(0L, p), e3(-2L, p);
  Real x0(3L, p);
  Real y0 = sqrt(mul_2si((x0 - e1) * (x0 - e2) * (x0 - e3), 2));
  for (auto _ : state) {
    ElogResult res = elog_real_posdisc(e1, e2, e3, x0, y0, ctx);
    benchmark::DoNotOptimize(res.z);
  }
}
BENCHMARK(bm_elog_real)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
