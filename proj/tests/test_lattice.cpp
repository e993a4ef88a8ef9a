#include "doctest.h"
#include "ecperiods/errors.hpp"
#include "ecperiods/lattice.hpp"
#include "helpers.hpp"

using namespace ecp;
using tst::pow10;

namespace {

CNum comb(long m, long n, const Lattice& l) { return l.w1 * m + l.w2 * n; }

Real det(const Lattice& l) { return l.w1.re * l.w2.im - l.w1.im * l.w2.re; }

}  // namespace

TEST_CASE("make_oriented fixes the orientation and rejects degenerate input") {
  PrecisionContext ctx = make_context(50);
  auto C = [&](const char* s) { return parse_cnum(s, ctx); };
  Lattice l = make_oriented(C("2+i"), C("1+3i"), ctx);
  CHECK(det(l) > 0L);
  Lattice f = make_oriented(C("2+i"), C("-1-3i"), ctx);  // wrong side: second vector flips
  CHECK(det(f) > 0L);
  CHECK(abs(f.w2 - C("1+3i")) <= pow10(-40, ctx.work_bits));
  CHECK_THROWS_AS(make_oriented(C("2+i"), C("4+2i"), ctx), DegenerateLattice);
  CHECK_THROWS_AS(make_oriented(C("0"), C("1"), ctx), DegenerateLattice);
}

TEST_CASE("reduce_basis returns a shortest first vector") {
  PrecisionContext ctx = make_context(100);
  tst::Rng rng(0x1a7);
  for (int t = 0; t < 12; ++t) {
    CNum w1 = rng.cnum(-5, 5, ctx.work_bits);
    CNum w2 = rng.cnum(-5, 5, ctx.work_bits);
    Real d = w1.re * w2.im - w1.im * w2.re;
    if (abs(d) < Real(1L, ctx.work_bits))  // skip too-skew draws
      continue;
    Lattice l = make_oriented(w1, w2, ctx);
    // shear it badly so the reducer has work to do
    Lattice skew{l.w1 + l.w2 * 17L, l.w1 * 6L + l.w2 * 103L};
    skew = make_oriented(skew.w1, skew.w2, ctx);
    Lattice red = reduce_basis(skew, ctx);

    // same lattice both ways
    CHECK(is_member(skew.w1, red, ctx));
    CHECK(is_member(skew.w2, red, ctx));
    CHECK(is_member(red.w1, skew, ctx));
    CHECK(is_member(red.w2, skew, ctx));
    CHECK(det(red) > 0L);

    // brute force: no nonzero combination is shorter than red.w1
    Real best = abs(red.w1);
    Real tol = pow10(-80, ctx.work_bits);
    for (long m = -20; m <= 20; ++m)
      for (long n = -20; n <= 20; ++n) {
        if (m == 0 && n == 0) continue;
        CHECK(abs(comb(m, n, red)) >= best - tol);
      }
    CHECK(abs(red.w1) <= abs(red.w2) + tol);
    // Lagrange condition: projection coefficient at most 1/2
    Real dot = red.w1.re * red.w2.re + red.w1.im * red.w2.im;
    CHECK(mul_2si(abs(dot), 1) <= norm2(red.w1) + tol);
  }
}

TEST_CASE("coordinates invert the basis combination") {
  PrecisionContext ctx = make_context(100);
  Lattice l = make_oriented(parse_cnum("1.5+0.25i", ctx), parse_cnum("-0.75+2i", ctx), ctx);
  tst::Rng rng(0x1a8);
  for (int t = 0; t < 10; ++t) {
    Real u = rng.real(-7, 7, ctx.work_bits), v = rng.real(-7, 7, ctx.work_bits);
    CNum z = l.w1 * u + l.w2 * v;
    Coordinates c = coordinates(z, l, ctx);
    CHECK(abs(c.u - u) <= pow10(-85, ctx.work_bits));
    CHECK(abs(c.v - v) <= pow10(-85, ctx.work_bits));
  }
  CHECK_THROWS_AS(coordinates(parse_cnum("1", ctx),
                              Lattice{parse_cnum("1+i", ctx), parse_cnum("2+2i", ctx)}, ctx),
                  DegenerateLattice);
}

TEST_CASE("reduction modes land in their domains") {
  PrecisionContext ctx = make_context(100);
  Lattice l = make_oriented(parse_cnum("2+0.5i", ctx), parse_cnum("0.25+1.75i", ctx), ctx);
  tst::Rng rng(0x1a9);
  for (int t = 0; t < 20; ++t) {
    CNum z = rng.cnum(-30, 30, ctx.work_bits);
    CNum zc = reduce_mod(z, l, ReduceMode::Centered, ctx);
    CNum zf = reduce_mod(z, l, ReduceMode::Fundamental, ctx);
    CHECK(is_member(z - zc, l, ctx));
    CHECK(is_member(z - zf, l, ctx));
    Coordinates cc = coordinates(zc, l, ctx);
    Real half(0.5, ctx.work_bits);
    CHECK(cc.u <= half);
    CHECK(-half < cc.u);
    CHECK(cc.v <= half);
    CHECK(-half < cc.v);
    Coordinates cf = coordinates(zf, l, ctx);
    CHECK(cf.u >= 0L);
    CHECK(cf.u < 1L);
    CHECK(cf.v >= 0L);
    CHECK(cf.v < 1L);
  }
  // boundary: exactly half a period stays at +1/2 under centered reduction
  CNum half_w1 = mul_2si(l.w1, -1);
  Coordinates cb = coordinates(reduce_mod(half_w1, l, ReduceMode::Centered, ctx), l, ctx);
  CHECK(abs(cb.u - Real(0.5, ctx.work_bits)) <= pow10(-85, ctx.work_bits));
}

TEST_CASE("membership and primitivity") {
  PrecisionContext ctx = make_context(100);
  Lattice l = make_oriented(parse_cnum("1.25+0.5i", ctx), parse_cnum("-0.5+1.5i", ctx), ctx);
  CHECK(is_member(comb(3, -4, l), l, ctx));
  CHECK(is_member(parse_cnum("0", ctx), l, ctx));
  CHECK(!is_member(comb(3, -4, l) + parse_cnum("0.01", ctx), l, ctx));

  CHECK(is_primitive(comb(1, 0, l), l, ctx));
  CHECK(is_primitive(comb(3, 5, l), l, ctx));
  CHECK(is_primitive(comb(-2, 3, l), l, ctx));
  CHECK(!is_primitive(comb(2, 0, l), l, ctx));
  CHECK(!is_primitive(comb(2, -4, l), l, ctx));
  CHECK(!is_primitive(comb(0, 0, l), l, ctx));
  CHECK(!is_primitive(parse_cnum("0.37", ctx), l, ctx));  // not in the lattice at all
}

TEST_CASE("rectangular detection") {
  PrecisionContext ctx = make_context(100);
  auto C = [&](const char* s) { return parse_cnum(s, ctx); };

  Lattice sq = make_oriented(C("2"), C("2i"), ctx);
  Lattice ortho{CNum(ctx.work_bits), CNum(ctx.work_bits)};
  CHECK(is_rectangular(sq, ctx, &ortho));
  CHECK(abs(ortho.w1.re * ortho.w2.re + ortho.w1.im * ortho.w2.im) <=
        pow10(-80, ctx.work_bits));

  // same lattice handed in with a sheared basis
  Lattice sheared = make_oriented(C("2"), C("2+2i"), ctx);
  CHECK(is_rectangular(sheared, ctx));

  // generic lattice is not rectangular
  Lattice gen = make_oriented(C("2+0.3i"), C("0.5+1.9i"), ctx);
  CHECK(!is_rectangular(gen, ctx));

  // square-diagonal basis: lattice generated by (1+i, 1-i) is rectangular
  Lattice diag = make_oriented(C("1+i"), C("1-i"), ctx);
  CHECK(is_rectangular(diag, ctx));
}
