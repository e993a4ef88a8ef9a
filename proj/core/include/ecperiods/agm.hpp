#ifndef ECPERIODS_AGM_HPP
#define ECPERIODS_AGM_HPP

#include <set>

#include "ecperiods/cnum.hpp"
#include "ecperiods/precision.hpp"

namespace ecp {

struct AgmPair {
  CNum a, b;
};

// Indices (1-based) of iterations whose square-root sign is flipped.
using SignSet = std::set<long>;

struct AgmResult {
  CNum m;
  long iterations;
  bool tie_broken;
};

enum class GoodState { Good, Bad, Tie };

// A pair is good when |a-b| <= |a+b|, i.e. Re(b/a) >= 0. Tie means
// | |a-b| - |a+b| | <= eps_tie * |a+b|.
GoodState is_good(const AgmPair& p, const PrecisionContext& ctx);

// One mean iteration: a' = (a+b)/2, b' = +-sqrt(a*b) with the sign making
// (a', b') good (tie resolved so Im(a'/b') > 0); flip selects the other sign.
AgmPair agm_step(const AgmPair& p, bool flip, const PrecisionContext& ctx);

// Limit of the all-good iteration: converge to |a_n - b_n| <= eps_conv*|a_n|,
// then take one extra step.
AgmResult agm_optimal(const AgmPair& p, const PrecisionContext& ctx);

// Limit with flipped steps exactly at the indices in s (step producing the
// pair with index n is step n, so s = {1} flips b_1), optimal afterwards.
AgmResult agm_scheduled(const AgmPair& p, const SignSet& s, const PrecisionContext& ctx);

// Classical AGM of two positive reals; same convergence policy as
// agm_optimal but without leaving the real line.
Real real_agm(const Real& a, const Real& b, const PrecisionContext& ctx);

// y or -y, whichever makes (x, .) good; ties resolved so Im(x/y) > 0.
CNum align_good(const CNum& x, const CNum& y, const PrecisionContext& ctx);

}  // namespace ecp

#endif
