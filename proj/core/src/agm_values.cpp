#include "ecperiods/agm_values.hpp"

#include <cstdlib>
#include <numeric>

#include "ecperiods/errors.hpp"

namespace ecp {

CosetReport classify_agm_value(const CNum& a, const CNum& b, const SignSet& s, int sign_a,
                               int sign_b, const PrecisionContext& ctx) {
  if ((sign_a != 1 && sign_a != -1) || (sign_b != 1 && sign_b != -1))
    throw Error("sign arguments must be +1 or -1");
  const long wb = ctx.work_bits;
  CNum ac = a.at_prec(wb), bc = b.at_prec(wb);

  CNum c = align_good(ac, principal_sqrt(ac * ac - bc * bc), ctx);
  CNum pi(Real::pi(wb), Real(0L, wb));
  CNum w = pi / agm_optimal({ac, bc}, ctx).m;
  CNum wp = mul_i(pi / agm_optimal({ac, c}, ctx).m);

  CNum value = pi / agm_scheduled({sign_a < 0 ? -ac : ac, sign_b < 0 ? -bc : bc}, s, ctx).m;

  Real d = w.re * wp.im - w.im * wp.re;
  if (abs(d) <= ctx.eps_tie * abs(w) * abs(wp))
    throw DegenerateLattice("coset basis is degenerate");
  Real u = (value.re * wp.im - value.im * wp.re) / d;
  Real v = (value.im * w.re - value.re * w.im) / d;

  Real ur = rint(u), vr = rint(v);
  Real err = max(abs(u - ur), abs(v - vr));
  if (err > Real::pow2(-(wb / 2), wb))
    throw CosetViolation("agm value is not an integer combination of the coset basis");
  if (!ur.fits_long() || !vr.fits_long())
    throw CosetViolation("coset coefficients exceed the representable range");

  CosetReport rep{value, w, wp, ur.to_long(), vr.to_long(), err, false, 0, 0, 0, 0, false};
  rep.primitive = std::gcd(std::labs(rep.u), std::labs(rep.v)) == 1;
  rep.residue_u = static_cast<int>(((rep.u % 4) + 4) % 4);
  rep.residue_v = static_cast<int>(((rep.v % 4) + 4) % 4);
  rep.expected_u = sign_a > 0 ? 1 : 3;
  rep.expected_v = sign_a == sign_b ? 0 : 2;
  rep.matches = rep.residue_u == rep.expected_u && rep.residue_v == rep.expected_v;
  return rep;
}

}  // namespace ecp
