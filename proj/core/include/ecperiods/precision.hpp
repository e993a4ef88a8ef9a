#ifndef ECPERIODS_PRECISION_HPP
#define ECPERIODS_PRECISION_HPP

#include <mpfr.h>

#include "ecperiods/real.hpp"

namespace ecp {

// Shared precision policy. work_bits covers the requested decimal digits plus
// guard bits; the epsilons are the convergence and tie-detection thresholds
// used throughout, both exact powers of two.
struct PrecisionContext {
  long target_digits;
  mpfr_prec_t work_bits;
  Real eps_conv;  // 2^(-work_bits + 2)
  Real eps_tie;   // 2^(-work_bits + 8)
  long iteration_cap;
};

// guard_bits = max(64, bits equivalent of target_digits/4);
// work_bits = ceil(target_digits * log2(10)) + guard_bits;
// iteration_cap = 8 * ceil(log2(work_bits)) + 64.
PrecisionContext make_context(long target_digits);

}  // namespace ecp

#endif
