#include <utility>

#include "doctest.h"
#include "ecperiods/agm.hpp"
#include "ecperiods/curve.hpp"
#include "ecperiods/elog.hpp"
#include "ecperiods/errors.hpp"
#include "ecperiods/periods.hpp"
#include "ecperiods/weierstrass.hpp"
#include "helpers.hpp"

using namespace ecp;
using tst::golden20;
using tst::near;
using tst::pow10;

namespace {

// coefficients of z = u*wa + v*wb in an explicit (non-reoriented) pair
std::pair<Real, Real> coords_in(const CNum& z, const CNum& wa, const CNum& wb) {
  Real det = wa.re * wb.im - wa.im * wb.re;
  Real u = (z.re * wb.im - z.im * wb.re) / det;
  Real v = (wa.re * z.im - wa.im * z.re) / det;
  return {u, v};
}

Point lift(const CurveRoots& r, const CNum& x, bool flip) {
  CNum y = principal_sqrt(mul_2si((x - r.e1) * (x - r.e2) * (x - r.e3), 2));
  return Point::affine(x, flip ? -y : y);
}

}  // namespace

TEST_CASE("worked logarithm on the generic complex curve") {
  PrecisionContext ctx = make_context(100);
  CurveRoots r{parse_cnum("3-2i", ctx), parse_cnum("1+i", ctx), parse_cnum("-4+i", ctx)};
  Point p = Point::affine(parse_cnum("2-i", ctx), parse_cnum("8+4i", ctx));

  ElogResult res = elog(r, p, ctx);
  CHECK(golden20(res.z, "-0.72212997914002299126+0.01717122412650902249i", ctx));
  CHECK(res.iterations <= 12);

  // m is the AGM limit of the same sign-fixed seed pair
  SignSelection sel = choose_signs(r, ctx);
  AgmResult m = agm_optimal({sel.a, sel.b}, ctx);
  CHECK(abs(res.m - m.m) <= pow10(-95, ctx.work_bits));

  // |Re(z * M / pi)| <= 1/2: the arctan branch keeps z in the central strip
  CNum strip = res.z * res.m / CNum(Real::pi(ctx.work_bits), Real(0L, ctx.work_bits));
  CHECK(abs(strip.re) <= Real(0.5, ctx.work_bits) + pow10(-30, ctx.work_bits));

  // decomposition in the published period pair matches the worked values
  PeriodTriple pt = period_basis(r, ctx);
  auto [u, v] = coords_in(res.z, pt.w1, pt.w2);
  CHECK(near(u, parse_cnum("-0.33249952362000772434", ctx).re, 18, ctx));
  CHECK(near(v, parse_cnum("-0.20502411273191295799", ctx).re, 18, ctx));
  CHECK(near(u - floor(u), parse_cnum("0.66750047637999227565", ctx).re, 18, ctx));
  CHECK(near(v - floor(v), parse_cnum("0.79497588726808704200", ctx).re, 18, ctx));

  // the reported coordinates decompose z in the lattice basis
  CNum rebuilt = pt.lattice.w1 * res.coords.u + pt.lattice.w2 * res.coords.v;
  CHECK(abs(res.z - rebuilt) <= pow10(-90, ctx.work_bits));

  // and wp inverts the logarithm
  WpValue w = wp(res.z, pt.lattice, ctx);
  CHECK(near(w.p, p.x, 90, ctx));
  CHECK(near(w.p_prime, p.y, 90, ctx));
}

TEST_CASE("worked logarithm on the rectangular curve") {
  PrecisionContext ctx = make_context(100);
  CurveRoots r{parse_cnum("1+3i", ctx), parse_cnum("-4-12i", ctx), parse_cnum("3+9i", ctx)};
  Point p = Point::affine(parse_cnum("3+2i", ctx), parse_cnum("28-14i", ctx));

  ElogResult res = elog(r, p, ctx);
  CHECK(golden20(res.z, "-0.42599662534207481578-0.02491254923738153924i", ctx));

  PeriodTriple pt = period_basis(r, ctx);
  auto [u, v] = coords_in(res.z, pt.w1, pt.w2);
  CHECK(near(u - floor(u), parse_cnum("0.62858224538977667533", ctx).re, 18, ctx));
  CHECK(near(v - floor(v), parse_cnum("0.37134662195976180031", ctx).re, 18, ctx));

  WpValue w = wp(res.z, pt.lattice, ctx);
  CHECK(near(w.p, p.x, 90, ctx));
  CHECK(near(w.p_prime, p.y, 90, ctx));
}

TEST_CASE("wp inverts the logarithm across the curve") {
  PrecisionContext ctx = make_context(100);
  CurveRoots r{parse_cnum("-1-3i", ctx), parse_cnum("3+i", ctx), parse_cnum("-2+2i", ctx)};
  PeriodTriple pt = period_basis(r, ctx);
  tst::Rng rng(0xe106);
  int done = 0;
  for (int t = 0; t < 40 && done < 8; ++t) {
    CNum x = rng.cnum(-3.0, 3.0, ctx.work_bits);
    if (abs(x - r.e1) < Real(0.3, ctx.work_bits) || abs(x - r.e2) < Real(0.3, ctx.work_bits) ||
        abs(x - r.e3) < Real(0.3, ctx.work_bits))
      continue;
    Point p = lift(r, x, (t & 1) != 0);
    ElogResult res = elog(r, p, ctx);
    WpValue w = wp(res.z, pt.lattice, ctx);
    CHECK(near(w.p, p.x, 88, ctx));
    CHECK(near(w.p_prime, p.y, 88, ctx));
    ++done;
  }
  CHECK(done == 8);
}

TEST_CASE("logarithm is a homomorphism to C mod the lattice") {
  PrecisionContext ctx = make_context(100);
  CurveRoots r{parse_cnum("3-2i", ctx), parse_cnum("1+i", ctx), parse_cnum("-4+i", ctx)};
  CurveInvariants inv = invariants_from_roots(r, ctx);
  PeriodTriple pt = period_basis(r, ctx);
  tst::Rng rng(0xadd);
  int done = 0;
  for (int t = 0; t < 30 && done < 5; ++t) {
    CNum xp = rng.cnum(-3.0, 3.0, ctx.work_bits);
    CNum xq = rng.cnum(-3.0, 3.0, ctx.work_bits);
    Real gap(0.3, ctx.work_bits);
    if (abs(xp - r.e1) < gap || abs(xp - r.e2) < gap || abs(xp - r.e3) < gap) continue;
    if (abs(xq - r.e1) < gap || abs(xq - r.e2) < gap || abs(xq - r.e3) < gap) continue;
    if (abs(xp - xq) < gap) continue;
    Point p = lift(r, xp, false);
    Point q = lift(r, xq, (t & 1) != 0);
    Point s = point_add(p, q, inv, ctx);
    if (s.infinity || abs(s.x - r.e1) < gap || abs(s.x - r.e2) < gap || abs(s.x - r.e3) < gap)
      continue;
    CNum zp = elog(r, p, ctx).z;
    CNum zq = elog(r, q, ctx).z;
    CNum zs = elog(r, s, ctx).z;
    CHECK(is_member(zp + zq - zs, pt.lattice, ctx));

    CNum zn = elog(r, point_neg(p), ctx).z;
    CHECK(is_member(zp + zn, pt.lattice, ctx));
    ++done;
  }
  CHECK(done == 5);
}

TEST_CASE("2-torsion points map to half periods") {
  PrecisionContext ctx = make_context(100);
  CurveRoots r{parse_cnum("3-2i", ctx), parse_cnum("1+i", ctx), parse_cnum("-4+i", ctx)};
  PeriodTriple pt = period_basis(r, ctx);
  const CNum* roots[3] = {&r.e1, &r.e2, &r.e3};
  for (int which = 1; which <= 3; ++which) {
    ElogResult res = elog_2torsion(r, which, ctx);
    CHECK(!is_member(res.z, pt.lattice, ctx));
    CHECK(is_member(mul_2si(res.z, 1), pt.lattice, ctx));
    WpValue w = wp(res.z, pt.lattice, ctx);
    CHECK(near(w.p, *roots[which - 1], 90, ctx));
    CHECK(abs(w.p_prime) <= pow10(-90, ctx.work_bits));
  }
  CHECK_THROWS_AS(elog_2torsion(r, 0, ctx), Error);
  CHECK_THROWS_AS(elog_2torsion(r, 5, ctx), Error);

  // the general entry point refuses y = 0 inputs
  Point t2 = Point::affine(r.e2, CNum(0L, 0L, ctx.work_bits));
  CHECK_THROWS_AS(elog(r, t2, ctx), TwoTorsionInput);
}

TEST_CASE("real curve, three real roots: real iteration matches the general path") {
  PrecisionContext ctx = make_context(100);
  mpfr_prec_t p = ctx.work_bits;
  Real e1(2L, p), e2(0L, p), e3(-2L, p);
  Real zero(0L, p);
  CurveRoots rc{CNum(e1, zero), CNum(e2, zero), CNum(e3, zero)};

  // unbounded component: x0 > e1
  Real x0(3L, p);
  Real y0 = sqrt(Real(60L, p));
  ElogResult fast = elog_real_posdisc(e1, e2, e3, x0, y0, ctx);
  ElogResult gen = elog(rc, Point::affine(CNum(x0, zero), CNum(y0, zero)), ctx);
  CHECK(near(fast.z, gen.z, 90, ctx));
  CHECK(abs(fast.z.im) <= pow10(-95, p));
  CHECK(fast.iterations > 0);

  // bounded component: e3 < x0 < e2, logarithm gains the imaginary half period
  Real xe(-1L, p);
  Real ye = sqrt(Real(12L, p));
  ElogResult egg = elog_real_posdisc(e1, e2, e3, xe, ye, ctx);
  ElogResult egg_gen = elog(rc, Point::affine(CNum(xe, zero), CNum(ye, zero)), ctx);
  CHECK(near(egg.z, egg_gen.z, 90, ctx));
  PeriodTriple pt = periods_real_positive_disc(e1, e2, e3, ctx);
  CHECK(near(egg.z.im, mul_2si(pt.w2.im, -1), 90, ctx));

  // wp round-trips both
  WpValue w = wp(fast.z, pt.lattice, ctx);
  CHECK(near(w.p, CNum(x0, zero), 90, ctx));
  WpValue we = wp(egg.z, pt.lattice, ctx);
  CHECK(near(we.p, CNum(xe, zero), 90, ctx));
  CHECK(near(we.p_prime, CNum(ye, zero), 90, ctx));

  // points with x in the gap (e2, e1) or below e3 cannot satisfy the equation
  CHECK_THROWS_AS(elog_real_posdisc(e1, e2, e3, Real(1L, p), Real(1L, p), ctx), OffCurve);
  CHECK_THROWS_AS(elog_real_posdisc(e1, e2, e3, Real(-3L, p), Real(2L, p), ctx), OffCurve);
  CHECK_THROWS_AS(elog_real_posdisc(e1, e2, e3, e2, Real(0L, p), ctx), TwoTorsionInput);
  CHECK_THROWS_AS(elog_real_posdisc(e2, e1, e3, x0, y0, ctx), DegenerateCurve);
}

TEST_CASE("real curve, one real root: conjugate seed matches the general path") {
  PrecisionContext ctx = make_context(100);
  mpfr_prec_t p = ctx.work_bits;
  Real e1(1L, p), zero(0L, p);
  CNum e2 = parse_cnum("-0.5+2i", ctx);
  CurveRoots rc{CNum(e1, zero), e2, conj(e2)};

  Real x0(3L, p);
  Real y0 = sqrt(Real(130L, p));
  ElogResult fast = elog_real_negdisc(e1, e2, x0, y0, ctx);
  ElogResult gen = elog(rc, Point::affine(CNum(x0, zero), CNum(y0, zero)), ctx);
  CHECK(near(fast.z, gen.z, 90, ctx));
  CHECK(fast.iterations > 0);

  // negated y flips the logarithm (mod lattice)
  ElogResult neg = elog_real_negdisc(e1, e2, x0, -y0, ctx);
  PeriodTriple pt = periods_real_negative_disc(e1, e2, ctx);
  CHECK(is_member(fast.z + neg.z, pt.lattice, ctx));

  WpValue w = wp(fast.z, pt.lattice, ctx);
  CHECK(near(w.p, CNum(x0, zero), 90, ctx));
  CHECK(near(w.p_prime, CNum(y0, zero), 90, ctx));

  CHECK_THROWS_AS(elog_real_negdisc(e1, e2, Real(0L, p), Real(1L, p), ctx), OffCurve);
  CHECK_THROWS_AS(elog_real_negdisc(e1, conj(e2), x0, y0, ctx), DegenerateCurve);
}

TEST_CASE("bad inputs to the logarithm") {
  PrecisionContext ctx = make_context(100);
  CurveRoots r{parse_cnum("3-2i", ctx), parse_cnum("1+i", ctx), parse_cnum("-4+i", ctx)};
  CHECK_THROWS_AS(elog(r, Point::at_infinity(ctx.work_bits), ctx), InfinityInput);
  CHECK_THROWS_AS(elog(r, Point::affine(parse_cnum("1", ctx), parse_cnum("1", ctx)), ctx),
                  OffCurve);
  CurveRoots bad{parse_cnum("1", ctx), parse_cnum("1", ctx), parse_cnum("-2", ctx)};
  CHECK_THROWS_AS(elog(bad, Point::affine(parse_cnum("2", ctx), parse_cnum("4", ctx)), ctx),
                  DegenerateCurve);
}
