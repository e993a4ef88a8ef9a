#include "ecperiods/elog.hpp"

#include "ecperiods/agm.hpp"
#include "ecperiods/errors.hpp"

namespace ecp {

namespace {

// relative 10^(-digits/2): accepts points carrying at least half the
// requested digits, so inputs rounded to the output precision round-trip
Real half_prec_tol(const PrecisionContext& ctx) {
  Real t(10L, ctx.work_bits);
  mpfr_pow_si(t.raw(), t.raw(), -(ctx.target_digits / 2), MPFR_RNDN);
  return t;
}

// y^2 against 4(x-e1)(x-e2)(x-e3): first that the point satisfies the curve
// equation at half working precision, then that y is not a working-precision
// zero (in which case the caller must use the 2-torsion entry point).
void check_point(const CNum& lhs, const CNum& rhs, const PrecisionContext& ctx) {
  Real scale = abs(lhs) + abs(rhs) + Real(1L, ctx.work_bits);
  if (abs(lhs - rhs) > half_prec_tol(ctx) * scale)
    throw OffCurve("point does not satisfy the curve equation");
  if (abs(lhs) <= ctx.eps_tie * (abs(rhs) + abs(lhs)))
    throw TwoTorsionInput("y = 0 at working precision: this is a 2-torsion point");
}

struct ComplexIter {
  CNum m, t;
  long n;
};

// Runs good AGM steps alongside the r/t recurrences until both the pair and r
// settle, then performs one more full iteration.
ComplexIter iterate_complex(AgmPair p, CNum r, CNum t, const PrecisionContext& ctx) {
  const CNum one(1L, 0L, ctx.work_bits);
  long n = 0;
  bool last = false;
  while (true) {
    if (n >= ctx.iteration_cap) throw NonConvergence("elliptic log iteration cap exceeded");
    ++n;
    AgmPair prev = p;
    p = agm_step(p, false, ctx);
    r = principal_sqrt(p.a * (r + one) / (prev.b * r + prev.a));
    t = r * t;
    if (last) break;
    if (abs(p.a - p.b) <= ctx.eps_conv * abs(p.a) && abs(r - one) <= ctx.eps_conv) last = true;
  }
  return {mul_2si(p.a + p.b, -1), t, n};
}

struct RealIter {
  Real m, t;
  long n;
};

// Same iteration on the real line: all quantities stay positive except t.
RealIter iterate_real(Real a, Real b, Real r, Real t, const PrecisionContext& ctx) {
  const Real one(1L, ctx.work_bits);
  long n = 0;
  bool last = false;
  while (true) {
    if (n >= ctx.iteration_cap) throw NonConvergence("elliptic log iteration cap exceeded");
    ++n;
    Real pa = a, pb = b;
    a = mul_2si(pa + pb, -1);
    b = sqrt(pa * pb);
    r = sqrt(a * (r + one) / (pb * r + pa));
    t = r * t;
    if (last) break;
    if (abs(a - b) <= ctx.eps_conv * a && abs(r - one) <= ctx.eps_conv) last = true;
  }
  return {mul_2si(a + b, -1), t, n};
}

}  // namespace

ElogResult elog(const CurveRoots& roots, const Point& p, const PrecisionContext& ctx) {
  if (p.infinity) throw InfinityInput("the logarithm of the point at infinity is 0");
  require_distinct_roots(roots, ctx);

  CNum x0 = p.x.at_prec(ctx.work_bits), y0 = p.y.at_prec(ctx.work_bits);
  CNum rhs = mul_2si((x0 - roots.e1) * (x0 - roots.e2) * (x0 - roots.e3), 2);
  check_point(y0 * y0, rhs, ctx);

  CNum a = principal_sqrt(roots.e1 - roots.e3);
  CNum b = align_good(a, principal_sqrt(roots.e1 - roots.e2), ctx);
  CNum r1 = principal_sqrt((x0 - roots.e3) / (x0 - roots.e2));
  CNum t1 = -y0 / mul_2si(r1 * (x0 - roots.e2), 1);

  ComplexIter it = iterate_complex({a, b}, r1, t1, ctx);
  CNum z = principal_arctan(it.m / it.t, ctx) / it.m;

  PeriodTriple pb = period_basis(roots, ctx);
  return {z, it.m, coordinates(z, pb.lattice, ctx), it.n};
}

ElogResult elog_2torsion(const CurveRoots& roots, int which, const PrecisionContext& ctx) {
  require_distinct_roots(roots, ctx);
  CurveRoots rot = roots;
  if (which == 2)
    rot = {roots.e2, roots.e3, roots.e1};
  else if (which == 3)
    rot = {roots.e3, roots.e1, roots.e2};
  else if (which != 1)
    throw Error("2-torsion index must be 1, 2, or 3");

  CNum a = principal_sqrt(rot.e1 - rot.e3);
  CNum b = align_good(a, principal_sqrt(rot.e1 - rot.e2), ctx);
  AgmResult res = agm_optimal({a, b}, ctx);
  CNum z = mul_2si(CNum(Real::pi(ctx.work_bits), Real(0L, ctx.work_bits)) / res.m, -1);

  PeriodTriple pb = period_basis(roots, ctx);
  return {z, res.m, coordinates(z, pb.lattice, ctx), res.iterations};
}

ElogResult elog_real_posdisc(const Real& e1_, const Real& e2_, const Real& e3_, const Real& x0_,
                             const Real& y0_, const PrecisionContext& ctx) {
  const long wb = ctx.work_bits;
  Real e1 = e1_.at_prec(wb), e2 = e2_.at_prec(wb), e3 = e3_.at_prec(wb);
  Real x0 = x0_.at_prec(wb), y0 = y0_.at_prec(wb);

  Real sc = max(abs(e1), max(abs(e2), abs(e3)));
  if (!(e1 - e2 > ctx.eps_tie * sc) || !(e2 - e3 > ctx.eps_tie * sc))
    throw DegenerateCurve("roots must satisfy e1 > e2 > e3");

  Real rhs = mul_2si((x0 - e1) * (x0 - e2) * (x0 - e3), 2);
  check_point(CNum(y0 * y0, Real(0L, wb)), CNum(rhs, Real(0L, wb)), ctx);

  bool egg;
  if (x0 > e1)
    egg = false;
  else if (x0 > e3 && x0 < e2)
    egg = true;
  else
    throw ComponentError(
        "x must lie on the unbounded component (x > e1) or the bounded one (e3 < x < e2)");

  Real a = sqrt(e1 - e3), b = sqrt(e1 - e2);
  Real r(wb), t(wb);
  if (!egg) {
    r = sqrt((x0 - e3) / (x0 - e2));
    t = -y0 / mul_2si(r * (x0 - e2), 1);
  } else {
    r = a / sqrt(e1 - x0);
    t = r * y0 / mul_2si(x0 - e3, 1);
  }

  RealIter it = iterate_real(a, b, r, t, ctx);
  Real zx = atan(it.m / it.t) / it.m;
  Real m2 = real_agm(sqrt(e2 - e3), a, ctx);

  Real pi = Real::pi(wb);
  CNum w1(pi / it.m, Real(0L, wb));
  CNum w2(Real(0L, wb), pi / m2);
  Lattice lat = make_oriented(w1, w2, ctx);

  CNum z = egg ? CNum(zx, mul_2si(w2.im, -1)) : CNum(zx, Real(0L, wb));
  return {z, CNum(it.m, Real(0L, wb)), coordinates(z, lat, ctx), it.n};
}

ElogResult elog_real_negdisc(const Real& e1_, const CNum& e2_, const Real& x0_, const Real& y0_,
                             const PrecisionContext& ctx) {
  const long wb = ctx.work_bits;
  Real e1 = e1_.at_prec(wb), x0 = x0_.at_prec(wb), y0 = y0_.at_prec(wb);
  CNum e2 = e2_.at_prec(wb);

  Real sc = max(abs(e1), abs(e2));
  if (!(e2.im > ctx.eps_tie * sc))
    throw DegenerateCurve("the non-real root pair must have positive imaginary part");

  // Over the reals the curve is y^2 = 4 (x - e1) |x - e2|^2.
  Real rhs = mul_2si((x0 - e1) * norm2(CNum(x0, Real(0L, wb)) - e2), 2);
  check_point(CNum(y0 * y0, Real(0L, wb)), CNum(rhs, Real(0L, wb)), ctx);

  if (!(x0 > e1)) throw ComponentError("x must exceed the real root e1");

  CNum e3 = conj(e2);
  CNum su = principal_sqrt(CNum(x0, Real(0L, wb)) - e3);
  Real u = su.re, v = su.im;
  CNum a0 = principal_sqrt(CNum(e1, Real(0L, wb)) - e3);
  Real x = a0.re, y = a0.im;
  if (!(u > 0L) || !(v > 0L) || !(x > 0L) || !(y > 0L))
    throw InternalError("square roots expected in the open first quadrant");

  // One step from the conjugate pair (x+yi, x-yi) lands on the real pair
  // (x, |x+yi|) and turns r, t real; the rest of the iteration stays real.
  Real rabs = hypot(x, y);
  Real r2 = sqrt(u * x / (u * x + v * y));
  Real t2 = -y0 / mul_2si(u * u + v * v, 1) * r2;

  RealIter it = iterate_real(x, rabs, r2, t2, ctx);
  Real zx = atan(it.m / it.t) / it.m;

  Real pi = Real::pi(wb);
  Real w1x = pi / it.m;
  CNum w1(w1x, Real(0L, wb));
  CNum w2(mul_2si(w1x, -1), mul_2si(pi / real_agm(y, rabs, ctx), -1));
  Lattice lat = make_oriented(w1, w2, ctx);

  CNum z(zx, Real(0L, wb));
  return {z, CNum(it.m, Real(0L, wb)), coordinates(z, lat, ctx), it.n + 1};
}

}  // namespace ecp
