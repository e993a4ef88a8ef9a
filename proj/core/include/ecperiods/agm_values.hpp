#ifndef ECPERIODS_AGM_VALUES_HPP
#define ECPERIODS_AGM_VALUES_HPP

#include "ecperiods/agm.hpp"
#include "ecperiods/cnum.hpp"
#include "ecperiods/precision.hpp"

namespace ecp {

// Where pi/M_S(sign_a*a, sign_b*b) sits over the canonical basis (w, wp).
struct CosetReport {
  CNum value;  // pi / M_S(sign_a*a, sign_b*b)
  CNum w;      // pi / M(a, b)
  CNum wp;     // i*pi / M(a, c), c = sqrt(a^2 - b^2) with (a, c) good
  long u = 0, v = 0;  // value = u*w + v*wp
  Real err;           // larger distance of the raw coefficients from integers
  bool primitive = false;              // gcd(u, v) == 1
  int residue_u = 0, residue_v = 0;    // u mod 4, v mod 4
  int expected_u = 0, expected_v = 0;  // residues the sign pattern predicts
  bool matches = false;                // residues agree with the prediction
};

// Runs the AGM from (sign_a*a, sign_b*b) with the non-principal square root
// taken at the steps in s, and expresses pi/M over (w, wp). Signs are +1/-1.
// Throws CosetViolation when the coefficients are not integers at half
// working precision.
CosetReport classify_agm_value(const CNum& a, const CNum& b, const SignSet& s, int sign_a,
                               int sign_b, const PrecisionContext& ctx);

}  // namespace ecp

#endif
