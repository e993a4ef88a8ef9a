#ifndef ECPERIODS_ELOG_HPP
#define ECPERIODS_ELOG_HPP

#include "ecperiods/curve.hpp"
#include "ecperiods/lattice.hpp"
#include "ecperiods/periods.hpp"

namespace ecp {

// Running state of the logarithm iteration (exposed for tests/inspection).
struct ElogState {
  AgmPair pair;
  CNum r, t;
  long n;
};

struct ElogResult {
  CNum z;              // the logarithm, with -1/2 < Re(z * M / pi) <= 1/2
  CNum m;              // AGM limit M(a0, b0)
  Coordinates coords;  // of z in the period_basis lattice of the same roots
  long iterations;
};

// Elliptic logarithm of an affine non-2-torsion point on
// y^2 = 4(x-e1)(x-e2)(x-e3), roots taken in the order given. Starts from
// r = sqrt((x0-e3)/(x0-e2)), t = -y0/(2 r (x0-e2)) and updates
// r <- sqrt(a_n (r+1) / (b_{n-1} r + a_{n-1})), t <- r t alongside the good
// AGM steps; finishes with z = arctan(M/t)/M.
ElogResult elog(const CurveRoots& r, const Point& p, const PrecisionContext& ctx);

// Logarithm of the 2-torsion point (e_which, 0): relabels the chosen root to
// the front and returns half the corresponding real period slot,
// z = pi / (2 M(a0, b0)).
ElogResult elog_2torsion(const CurveRoots& r, int which, const PrecisionContext& ctx);

// Real curve, e1 > e2 > e3. Points with x0 > e1 iterate entirely over the
// reals; points on the bounded component (e3 < x0 < e2) use the shifted
// start r = sqrt(e1-e3)/sqrt(e1-x0), t = r*y0/(2(x0-e3)) and gain w2/2.
ElogResult elog_real_posdisc(const Real& e1, const Real& e2, const Real& e3, const Real& x0,
                             const Real& y0, const PrecisionContext& ctx);

// Real curve with one real root: e1 real, e2 = conj(e3), Im(e2) > 0. With
// sqrt(x0-e3) = u+iv the start is r1 = (u+iv)/(u-iv), t1 = -y0/(2(u^2+v^2));
// one analytic step lands on the real pair (x, |a0|) with
// r2 = sqrt(u*x/(u*x + v*y)) > 0, and the iteration stays real.
ElogResult elog_real_negdisc(const Real& e1, const CNum& e2, const Real& x0, const Real& y0,
                             const PrecisionContext& ctx);

}  // namespace ecp

#endif
