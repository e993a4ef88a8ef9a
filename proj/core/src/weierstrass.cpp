#include "ecperiods/weierstrass.hpp"

#include <vector>

#include "ecperiods/errors.hpp"

namespace ecp {

namespace {

CurveInvariants invariants_of_reduced(const Lattice& red, const PrecisionContext& ctx) {
  mpfr_prec_t p = ctx.work_bits;
  CNum tau = red.w2 / red.w1;
  Real two_pi = mul_2si(Real::pi(p), 1);
  CNum q = cexp({-(two_pi * tau.im), two_pi * tau.re});
  Real qa = abs(q);
  if (!(qa < 1L)) throw InternalError("nome outside the unit disc");

  CNum one(1, 0, p);
  CNum e4 = one, e6 = one;
  Real cutoff = Real::pow2(-static_cast<long>(ctx.work_bits) - 8);
  CNum qn = q;
  for (long n = 1; n < 1000000; ++n) {
    Real n3 = Real(n, p) * n * n;
    Real n5 = n3 * n * n;
    CNum frac = qn / (one - qn);
    e4 = e4 + n3 * frac * 240L;
    e6 = e6 - n5 * frac * 504L;
    if (n5 * abs(qn) <= cutoff) break;
    qn = qn * q;
  }

  Real pi = Real::pi(p);
  Real pi2 = pi * pi;
  CNum w2 = red.w1 * red.w1;
  CNum w4 = w2 * w2;
  CNum g2 = (mul_2si(pi2 * pi2, 2) / 3L) * e4 / w4;
  CNum g3 = (mul_2si(pi2 * pi2 * pi2, 3) / 27L) * e6 / (w4 * w2);
  return {std::move(g2), std::move(g3)};
}

WpValue duplicate(WpValue v, const CurveInvariants& inv, long times) {
  for (long i = 0; i < times; ++i) {
    if (abs(v.p_prime).is_zero())
      throw InternalError("hit a 2-torsion value while doubling the argument");
    CNum lambda = (v.p * v.p * 12L - inv.g2) / mul_2si(v.p_prime, 1);
    CNum x = mul_2si(lambda * lambda, -2) - mul_2si(v.p, 1);
    CNum y = -(v.p_prime + lambda * (x - v.p));
    v = {std::move(x), std::move(y)};
  }
  return v;
}

}  // namespace

CurveInvariants lattice_invariants(const Lattice& l, const PrecisionContext& ctx) {
  return invariants_of_reduced(reduce_basis(l, ctx), ctx);
}

WpValue wp(const CNum& z, const Lattice& l, const PrecisionContext& ctx) {
  Lattice red = reduce_basis(l, ctx);
  CurveInvariants inv = invariants_of_reduced(red, ctx);

  CNum zr = reduce_mod(z, red, ReduceMode::Centered, ctx);
  Real lam = abs(red.w1);
  Real za = abs(zr);
  if (za <= Real::pow2(-static_cast<long>(ctx.work_bits / 2)) * lam)
    throw PoleError("wp evaluated at a lattice point");

  // Halve into |w| <= lam/2^s, where every series term gains 2s bits. For a
  // reduced basis |c_m| <= 24(2m-1)/lam^(2m), so the truncation index giving
  // a tail below 2^-(work+32) is known up front; no term-size test is needed
  // (individual terms can vanish by symmetry, e.g. all odd ones when g3 = 0).
  // s grows like sqrt(work_bits) to balance series length against the
  // duplication count.
  const long wb = static_cast<long>(ctx.work_bits);
  long s = 3;
  while (s * s * 4 < wb) ++s;
  const long terms = (wb + 32) / (2 * s) + 8;

  long k = 0;
  Real bound = mul_2si(lam, -s);
  while (mul_2si(za, -k) > bound) ++k;
  CNum w = mul_2si(zr, -k);

  mpfr_prec_t p = ctx.work_bits;
  std::vector<CNum> c(static_cast<std::size_t>(terms) + 1, CNum(p));
  c[2] = inv.g2 / 20L;
  c[3] = inv.g3 / 28L;
  for (long m = 4; m <= terms; ++m) {
    CNum acc(p);
    for (long j = 2; j <= m - 2; ++j)
      acc = acc + c[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(m - j)];
    c[static_cast<std::size_t>(m)] = acc * 3L / ((2 * m + 1) * (m - 3));
  }

  CNum w2 = w * w;
  CNum inv_w2 = CNum(1, 0, p) / w2;
  CNum sum_p = inv_w2;    // 1/w^2 + sum c_m w^(2m-2)
  CNum sum_dp = CNum(p);  // sum (2m-2) c_m w^(2m-2); P' = (sum_dp - 2/w^2)/w
  CNum pw = w2;           // w^(2m-2) for the current m
  for (long m = 2; m <= terms; ++m) {
    CNum term = c[static_cast<std::size_t>(m)] * pw;
    sum_p = sum_p + term;
    sum_dp = sum_dp + term * (2 * m - 2);
    pw = pw * w2;
  }
  CNum dp = (sum_dp - mul_2si(inv_w2, 1)) / w;
  return duplicate({std::move(sum_p), std::move(dp)}, inv, k);
}

WpValue wp_limit(const CNum& z, const CNum& w1, const PrecisionContext& ctx) {
  if (w1.is_zero()) throw DegenerateLattice("wp_limit with zero period");
  CNum f = CNum(Real::pi(ctx.work_bits), Real(0L, ctx.work_bits)) / w1;
  CNum u = f * z;
  CNum s = csin(u);
  if (abs(s) <= Real::pow2(-static_cast<long>(ctx.work_bits / 2)))
    throw PoleError("wp_limit evaluated at a pole");
  CNum c = ccos(u);
  CNum s2 = s * s;
  CNum f2 = f * f;
  CNum third = CNum(1, 0, ctx.work_bits) / 3L;
  CNum p = f2 * (CNum(1, 0, ctx.work_bits) / s2 - third);
  CNum pp = mul_2si(f2 * f * c / (s2 * s), 1);
  return {std::move(p), -pp};
}

}  // namespace ecp
