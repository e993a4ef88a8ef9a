#include "ecperiods/curve.hpp"

#include <array>
#include <cmath>
#include <complex>

#include "ecperiods/errors.hpp"

namespace ecp {

namespace {

Real half_tol(const PrecisionContext& ctx) {
  return Real::pow2(-static_cast<long>(ctx.work_bits / 2));
}

void check_not_singular(const CurveInvariants& inv, const PrecisionContext& ctx) {
  CNum g2c = inv.g2 * inv.g2 * inv.g2;
  CNum g3s = inv.g3 * inv.g3 * 27L;
  Real scale = abs(g2c) + abs(g3s);
  if (scale.is_zero() || abs(g2c - g3s) <= ctx.eps_tie * scale)
    throw SingularCurve("discriminant g2^3 - 27 g3^2 vanishes");
}

// Binary exponent shift putting the cubic's coefficients near unit scale, so
// the double-precision seed stage cannot overflow.
long seed_shift(const CurveInvariants& inv) {
  long e = 0;
  if (!inv.g2.is_zero()) e = std::max(e, (mpfr_get_exp(abs(inv.g2).raw()) + 1) / 2);
  if (!inv.g3.is_zero()) e = std::max(e, (mpfr_get_exp(abs(inv.g3).raw()) + 2) / 3);
  return e;
}

std::complex<double> to_cd(const CNum& z) { return {z.re.to_double(), z.im.to_double()}; }

// Cardano at double precision on X^3 + p X + q.
std::array<std::complex<double>, 3> cubic_seeds(std::complex<double> p, std::complex<double> q) {
  using CD = std::complex<double>;
  const CD omega(-0.5, std::sqrt(3.0) / 2.0);
  CD d = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
  CD u3 = -q / 2.0 + d;
  if (std::abs(u3) < std::abs(-q / 2.0 - d)) u3 = -q / 2.0 - d;
  if (std::abs(u3) < 1e-300) {
    CD r = std::pow(-q, 1.0 / 3.0);
    return {r, r * omega, r * omega * omega};
  }
  CD u = std::pow(u3, 1.0 / 3.0);
  std::array<CD, 3> roots{};
  for (int k = 0; k < 3; ++k) {
    roots[static_cast<std::size_t>(k)] = u - p / (3.0 * u);
    u *= omega;
  }
  return roots;
}

CNum newton_polish(CNum x, const CurveInvariants& inv, const PrecisionContext& ctx) {
  mpfr_prec_t p = ctx.work_bits + 32;
  x = x.at_prec(p);
  CNum g2 = inv.g2.at_prec(p), g3 = inv.g3.at_prec(p);
  Real stop = Real::pow2(-static_cast<long>(p) + 8);
  int settled = 0;
  for (int i = 0; i < 300 && settled < 2; ++i) {
    CNum x2 = x * x;
    CNum f = mul_2si(x2 * x, 2) - g2 * x - g3;
    CNum fp = x2 * 12L - g2;
    if (abs(fp).is_zero()) break;
    CNum delta = f / fp;
    x = x - delta;
    if (abs(delta) <= stop * (abs(x) + Real::pow2(-64)))
      ++settled;
    else
      settled = 0;
  }
  return x.at_prec(ctx.work_bits);
}

bool less_by_order(const CNum& a, const CNum& b) {
  Real na = norm2(a), nb = norm2(b);
  if (na != nb) return na > nb;
  if (a.re != b.re) return a.re > b.re;
  return a.im > b.im;
}

}  // namespace

CurveInvariants invariants_from_coeffs(const WeierstrassCoeffs& w, const PrecisionContext& ctx) {
  CNum b2 = w.a1 * w.a1 + w.a2 * 4L;
  CNum b4 = w.a4 * 2L + w.a1 * w.a3;
  CNum b6 = w.a3 * w.a3 + w.a6 * 4L;
  CNum g2 = (b2 * b2 - b4 * 24L) / 12L;
  CNum g3 = (b2 * b4 * 36L - b2 * b2 * b2 - b6 * 216L) / 216L;
  CurveInvariants inv{std::move(g2), std::move(g3)};
  check_not_singular(inv, ctx);
  return inv;
}

CurveRoots roots_from_invariants(const CurveInvariants& inv, const PrecisionContext& ctx) {
  check_not_singular(inv, ctx);
  long shift = seed_shift(inv);
  CNum g2n = mul_2si(inv.g2, -2 * shift);
  CNum g3n = mul_2si(inv.g3, -3 * shift);
  auto seeds = cubic_seeds(to_cd(g2n) * -0.25, to_cd(g3n) * -0.25);

  std::array<CNum, 3> roots{CNum(ctx.work_bits), CNum(ctx.work_bits), CNum(ctx.work_bits)};
  for (std::size_t k = 0; k < 3; ++k) {
    CNum seed(Real(seeds[k].real(), ctx.work_bits), Real(seeds[k].imag(), ctx.work_bits));
    roots[k] = newton_polish(mul_2si(seed, shift), inv, ctx);
  }

  // Colliding seeds around a tight root pair polish to one copy twice; the
  // missing root is recovered from the zero root sum.
  Real sc = max(abs(roots[0]), max(abs(roots[1]), abs(roots[2])));
  Real tol = half_tol(ctx) * sc;
  for (std::size_t i = 0; i < 3 && !sc.is_zero(); ++i) {
    std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
    if (abs(roots[i] - roots[j]) <= tol) {
      roots[i] = newton_polish(-(roots[j] + roots[k]), inv, ctx);
      if (abs(roots[i] - roots[j]) <= tol)
        throw SingularCurve("root multiplicity beyond working precision");
    }
  }

  CurveRoots out{roots[0], roots[1], roots[2]};
  CurveInvariants back = invariants_from_roots(out, ctx);
  Real t = half_tol(ctx);
  Real s2 = sc * sc + abs(inv.g2), s3 = sc * sc * sc + abs(inv.g3);
  if (!(abs(back.g2 - inv.g2) <= t * s2) || !(abs(back.g3 - inv.g3) <= t * s3))
    throw InternalError("root solving lost the invariants");

  std::array<CNum, 3> ord{out.e1, out.e2, out.e3};
  if (less_by_order(ord[1], ord[0])) std::swap(ord[0], ord[1]);
  if (less_by_order(ord[2], ord[1])) std::swap(ord[1], ord[2]);
  if (less_by_order(ord[1], ord[0])) std::swap(ord[0], ord[1]);
  return {ord[0], ord[1], ord[2]};
}

void require_distinct_roots(const CurveRoots& r, const PrecisionContext& ctx) {
  Real sc = max(abs(r.e1), max(abs(r.e2), abs(r.e3)));
  if (sc.is_zero()) throw DegenerateCurve("all roots vanish");
  if (abs(r.e1 - r.e2) <= ctx.eps_tie * sc || abs(r.e1 - r.e3) <= ctx.eps_tie * sc ||
      abs(r.e2 - r.e3) <= ctx.eps_tie * sc)
    throw DegenerateCurve("repeated root");
}

CurveInvariants invariants_from_roots(const CurveRoots& r, const PrecisionContext& ctx) {
  require_distinct_roots(r, ctx);
  CNum s = (r.e1 + r.e2 + r.e3) / 3L;
  CNum f1 = r.e1 - s, f2 = r.e2 - s, f3 = r.e3 - s;
  CNum g2 = (f1 * f2 + f1 * f3 + f2 * f3) * -4L;
  CNum g3 = mul_2si(f1 * f2 * f3, 2);
  return {std::move(g2), std::move(g3)};
}

namespace {

Real equation_scale(const Point& p, const CurveInvariants& inv) {
  Real ax = abs(p.x);
  return norm2(p.y) + mul_2si(ax * ax * ax, 2) + abs(inv.g2) * ax + abs(inv.g3) + 1L;
}

void require_on_curve(const Point& p, const CurveInvariants& inv, const PrecisionContext& ctx) {
  if (!p.infinity && !on_curve(p, inv, ctx)) throw OffCurve("point does not satisfy the curve");
}

}  // namespace

bool on_curve(const Point& p, const CurveInvariants& inv, const PrecisionContext& ctx,
              const Real* tol) {
  if (p.infinity) return true;
  Real t = tol ? *tol : half_tol(ctx);
  CNum rhs = mul_2si(p.x * p.x * p.x, 2) - inv.g2 * p.x - inv.g3;
  return abs(p.y * p.y - rhs) <= t * equation_scale(p, inv);
}

Point point_neg(const Point& p) {
  if (p.infinity) return p;
  return Point::affine(p.x, -p.y);
}

Point point_add(const Point& p, const Point& q, const CurveInvariants& inv,
                const PrecisionContext& ctx) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  require_on_curve(p, inv, ctx);
  require_on_curve(q, inv, ctx);

  Real sx = max(abs(p.x), max(abs(q.x), Real(1L, ctx.work_bits)));
  Real sy = max(abs(p.y), max(abs(q.y), Real(1L, ctx.work_bits)));
  bool same_x = abs(p.x - q.x) <= ctx.eps_tie * sx;

  CNum lambda(ctx.work_bits);
  if (same_x) {
    if (abs(p.y + q.y) <= ctx.eps_tie * sy) return Point::at_infinity(ctx.work_bits);
    lambda = (p.x * p.x * 12L - inv.g2) / mul_2si(p.y, 1);
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
  }
  CNum xr = mul_2si(lambda * lambda, -2) - p.x - q.x;
  CNum yr = -(p.y + lambda * (xr - p.x));
  return Point::affine(std::move(xr), std::move(yr));
}

}  // namespace ecp
