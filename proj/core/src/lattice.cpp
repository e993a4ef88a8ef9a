#include "ecperiods/lattice.hpp"

#include <gmp.h>

#include "ecperiods/errors.hpp"

namespace ecp {

namespace {

// Im(conj(a) * b); positive for an oriented basis (a, b).
Real cross(const CNum& a, const CNum& b) { return a.re * b.im - a.im * b.re; }

// Re(conj(a) * b).
Real dot(const CNum& a, const CNum& b) { return a.re * b.re + a.im * b.im; }

Real membership_tol(const PrecisionContext& ctx) {
  return Real::pow2(-static_cast<long>(ctx.work_bits / 2));
}

struct IntCoords {
  bool near_integers;
  Real mu, nv;  // rounded integer parts as exact reals
};

IntCoords round_coords(const Coordinates& c, const Real& tol) {
  Real mu = rint(c.u), nv = rint(c.v);
  bool ok = abs(c.u - mu) <= tol && abs(c.v - nv) <= tol;
  return {ok, std::move(mu), std::move(nv)};
}

}  // namespace

Lattice make_oriented(const CNum& wa, const CNum& wb, const PrecisionContext& ctx) {
  Real sa = abs(wa), sb = abs(wb);
  Real d = cross(wa, wb);
  if (sa.is_zero() || sb.is_zero() || abs(d) <= ctx.eps_tie * (sa * sb))
    throw DegenerateLattice("basis vectors are zero or R-linearly dependent");
  if (d.sgn() > 0) return {wa, wb};
  return {wa, -wb};
}

Lattice reduce_basis(const Lattice& l, const PrecisionContext& ctx) {
  CNum w1 = l.w1, w2 = l.w2;
  if (norm2(w2) < norm2(w1)) {
    CNum t = w1;
    w1 = w2;
    w2 = -t;
  }
  for (long i = 0; i < ctx.iteration_cap + static_cast<long>(ctx.work_bits); ++i) {
    Real m = rint(dot(w1, w2) / norm2(w1));
    if (!m.is_zero()) w2 = w2 - m * w1;
    if (norm2(w2) < norm2(w1)) {
      CNum t = w1;
      w1 = w2;
      w2 = -t;
      continue;
    }
    return {w1, w2};
  }
  throw InternalError("basis reduction failed to terminate");
}

Coordinates coordinates(const CNum& z, const Lattice& l, const PrecisionContext& ctx) {
  Real d = cross(l.w1, l.w2);
  Real scale = abs(l.w1) * abs(l.w2);
  if (scale.is_zero() || abs(d) <= ctx.eps_tie * scale)
    throw DegenerateLattice("coordinates on a degenerate basis");
  Real u = (z.re * l.w2.im - z.im * l.w2.re) / d;
  Real v = (z.im * l.w1.re - z.re * l.w1.im) / d;
  return {std::move(u), std::move(v)};
}

CNum reduce_mod(const CNum& z, const Lattice& l, ReduceMode mode, const PrecisionContext& ctx) {
  Coordinates c = coordinates(z, l, ctx);
  Real m(ctx.work_bits), n(ctx.work_bits);
  if (mode == ReduceMode::Centered) {
    // u - m in (-1/2, 1/2], so m = ceil(u - 1/2)
    m = ceil(c.u - Real(1L, ctx.work_bits) / 2L);
    n = ceil(c.v - Real(1L, ctx.work_bits) / 2L);
  } else {
    m = floor(c.u);
    n = floor(c.v);
  }
  return z - m * l.w1 - n * l.w2;
}

bool is_member(const CNum& z, const Lattice& l, const PrecisionContext& ctx, const Real* tol) {
  Real t = tol ? *tol : membership_tol(ctx);
  return round_coords(coordinates(z, l, ctx), t).near_integers;
}

bool is_primitive(const CNum& z, const Lattice& l, const PrecisionContext& ctx, const Real* tol) {
  Real t = tol ? *tol : membership_tol(ctx);
  IntCoords ic = round_coords(coordinates(z, l, ctx), t);
  if (!ic.near_integers) return false;
  mpz_t zm, zn;
  mpz_init(zm);
  mpz_init(zn);
  mpfr_get_z(zm, ic.mu.raw(), MPFR_RNDN);
  mpfr_get_z(zn, ic.nv.raw(), MPFR_RNDN);
  mpz_gcd(zm, zm, zn);
  bool coprime = mpz_cmp_ui(zm, 1) == 0;
  mpz_clear(zm);
  mpz_clear(zn);
  return coprime;
}

bool is_rectangular(const Lattice& l, const PrecisionContext& ctx, Lattice* ortho) {
  Lattice red = reduce_basis(l, ctx);
  Real re_part = dot(red.w1, red.w2);  // Re(w2/w1) * |w1|^2
  bool rect = abs(re_part) <= ctx.eps_tie * (abs(red.w1) * abs(red.w2));
  if (rect && ortho) *ortho = red;
  return rect;
}

}  // namespace ecp
