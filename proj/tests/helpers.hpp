#ifndef ECPERIODS_TESTS_HELPERS_HPP
#define ECPERIODS_TESTS_HELPERS_HPP

#include <random>

#include "ecperiods/cnum.hpp"
#include "ecperiods/precision.hpp"

namespace tst {

inline ecp::Real pow10(long e, mpfr_prec_t p) {
  ecp::Real t(10L, p);
  mpfr_pow_si(t.raw(), t.raw(), e, MPFR_RNDN);
  return t;
}

// |a - b| <= 10^-dec componentwise
inline bool near(const ecp::CNum& a, const ecp::CNum& b, long dec, const ecp::PrecisionContext& ctx) {
  ecp::Real tol = pow10(-dec, ctx.work_bits);
  return abs(a.re - b.re) <= tol && abs(a.im - b.im) <= tol;
}
inline bool near(const ecp::Real& a, const ecp::Real& b, long dec, const ecp::PrecisionContext& ctx) {
  return abs(a - b) <= pow10(-dec, ctx.work_bits);
}

// published reference values carry 20 decimals; allow one ulp of the print
inline bool golden20(const ecp::CNum& z, const char* text, const ecp::PrecisionContext& ctx) {
  ecp::CNum g = parse_cnum(text, ctx);
  ecp::Real tol = mul_2si(pow10(-20, ctx.work_bits), 1);
  return abs(z.re - g.re) <= tol && abs(z.im - g.im) <= tol;
}

// deterministic draws; doubles keep the inputs exactly representable
struct Rng {
  std::mt19937_64 g;
  explicit Rng(unsigned long long seed) : g(seed) {}
  double uniform(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(g);
  }
  ecp::Real real(double lo, double hi, mpfr_prec_t p) { return ecp::Real(uniform(lo, hi), p); }
  ecp::CNum cnum(double lo, double hi, mpfr_prec_t p) {
    return {ecp::Real(uniform(lo, hi), p), ecp::Real(uniform(lo, hi), p)};
  }
};

}  // namespace tst

#endif
