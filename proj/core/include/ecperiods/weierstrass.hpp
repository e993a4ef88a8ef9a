#ifndef ECPERIODS_WEIERSTRASS_HPP
#define ECPERIODS_WEIERSTRASS_HPP

#include "ecperiods/curve.hpp"
#include "ecperiods/lattice.hpp"

namespace ecp {

struct WpValue {
  CNum p, p_prime;
};

// Invariants g2, g3 of the lattice itself, via Eisenstein series in
// q = exp(2*pi*i*tau) on the reduced basis. Independent of any curve input,
// so it can sit in judgement over a claimed period lattice.
CurveInvariants lattice_invariants(const Lattice& l, const PrecisionContext& ctx);

// Weierstrass elliptic function and derivative for the lattice: reduce z,
// halve until inside the Laurent disc, sum the series, then undo the halving
// with the duplication (tangent) formula. Throws PoleError on z in the
// lattice within tolerance.
WpValue wp(const CNum& z, const Lattice& l, const PrecisionContext& ctx);

// Degenerate one-period limit: p = (pi/w1)^2 (1/sin^2(pi z/w1) - 1/3),
// p' = -2 (pi/w1)^3 cos(pi z/w1)/sin^3(pi z/w1).
WpValue wp_limit(const CNum& z, const CNum& w1, const PrecisionContext& ctx);

}  // namespace ecp

#endif
