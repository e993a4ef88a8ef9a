#include "ecperiods/precision.hpp"

#include <cmath>

#include "ecperiods/errors.hpp"

namespace ecp {

namespace {
constexpr long double kLog2Of10 = 3.3219280948873623478703194294893901759L;

long digits_to_bits(long digits) {
  return static_cast<long>(std::ceil(static_cast<long double>(digits) * kLog2Of10));
}
}  // namespace

PrecisionContext make_context(long target_digits) {
  if (target_digits < 1 || target_digits > 1000000)
    throw Error("target_digits out of range [1, 1000000]");
  long guard = std::max<long>(64, digits_to_bits((target_digits + 3) / 4));
  mpfr_prec_t work = static_cast<mpfr_prec_t>(digits_to_bits(target_digits) + guard);
  long cap = 8 * static_cast<long>(std::ceil(std::log2(static_cast<double>(work)))) + 64;
  return PrecisionContext{target_digits, work, Real::pow2(-static_cast<long>(work) + 2),
                          Real::pow2(-static_cast<long>(work) + 8), cap};
}

}  // namespace ecp
