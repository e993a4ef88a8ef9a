#ifndef ECPERIODS_CURVE_HPP
#define ECPERIODS_CURVE_HPP

#include "ecperiods/cnum.hpp"
#include "ecperiods/precision.hpp"

namespace ecp {

// Roots of 4X^3 - g2*X - g3, so the model is y^2 = 4(X-e1)(X-e2)(X-e3).
struct CurveRoots {
  CNum e1, e2, e3;
};

struct CurveInvariants {
  CNum g2, g3;
};

// Long Weierstrass coefficients of y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6.
struct WeierstrassCoeffs {
  CNum a1, a2, a3, a4, a6;
};

struct Point {
  bool infinity;
  CNum x, y;

  static Point at_infinity(mpfr_prec_t prec) { return {true, CNum(prec), CNum(prec)}; }
  static Point affine(CNum px, CNum py) { return {false, std::move(px), std::move(py)}; }
};

// b2 = a1^2 + 4a2, b4 = 2a4 + a1*a3, b6 = a3^2 + 4a6;
// g2 = (b2^2 - 24 b4)/12, g3 = (36 b2 b4 - b2^3 - 216 b6)/216.
// Throws SingularCurve when g2^3 - 27 g3^2 vanishes within tolerance.
CurveInvariants invariants_from_coeffs(const WeierstrassCoeffs& w, const PrecisionContext& ctx);

// Solves 4X^3 - g2*X - g3 = 0: double-precision seeds polished by Newton at
// work precision. Ordering: descending |e|, ties by descending (Re, Im).
CurveRoots roots_from_invariants(const CurveInvariants& inv, const PrecisionContext& ctx);

// Invariants of the sum-to-zero translate: with e_j' = e_j - (e1+e2+e3)/3,
// g2 = -4(e1'e2' + e1'e3' + e2'e3'), g3 = 4 e1'e2'e3'.
// Throws DegenerateCurve when two roots coincide within tolerance.
CurveInvariants invariants_from_roots(const CurveRoots& r, const PrecisionContext& ctx);

// Throws DegenerateCurve unless the roots are pairwise distinct beyond
// eps_tie relative to their magnitude.
void require_distinct_roots(const CurveRoots& r, const PrecisionContext& ctx);

// |y^2 - (4x^3 - g2*x - g3)| <= tol * scale; default tol 2^(-work_bits/2).
bool on_curve(const Point& p, const CurveInvariants& inv, const PrecisionContext& ctx,
              const Real* tol = nullptr);

// Chord-tangent addition on y^2 = 4x^3 - g2*x - g3. Inputs must satisfy the
// equation within tolerance.
Point point_add(const Point& p, const Point& q, const CurveInvariants& inv,
                const PrecisionContext& ctx);
Point point_neg(const Point& p);

}  // namespace ecp

#endif
