#ifndef ECPERIODS_CNUM_HPP
#define ECPERIODS_CNUM_HPP

#include <string>
#include <utility>

#include "ecperiods/precision.hpp"
#include "ecperiods/real.hpp"

namespace ecp {

// Complex number with explicit-precision parts.
struct CNum {
  Real re, im;

  explicit CNum(mpfr_prec_t prec) : re(0L, prec), im(0L, prec) {}
  CNum(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  CNum(long r, long i, mpfr_prec_t prec) : re(r, prec), im(i, prec) {}

  mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }

  friend CNum operator+(const CNum& a, const CNum& b) { return {a.re + b.re, a.im + b.im}; }
  friend CNum operator-(const CNum& a, const CNum& b) { return {a.re - b.re, a.im - b.im}; }
  friend CNum operator*(const CNum& a, const CNum& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend CNum operator/(const CNum& a, const CNum& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  CNum operator-() const { return {-re, -im}; }

  friend CNum operator*(const CNum& a, const Real& s) { return {a.re * s, a.im * s}; }
  friend CNum operator*(const Real& s, const CNum& a) { return a * s; }
  friend CNum operator/(const CNum& a, const Real& s) { return {a.re / s, a.im / s}; }
  friend CNum operator/(const Real& s, const CNum& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {s * b.re / d, -(s * b.im) / d};
  }
  friend CNum operator*(const CNum& a, long s) { return {a.re * s, a.im * s}; }
  friend CNum operator/(const CNum& a, long s) { return {a.re / s, a.im / s}; }

  friend bool operator==(const CNum& a, const CNum& b) { return a.re == b.re && a.im == b.im; }

  friend CNum conj(const CNum& a) { return {a.re, -a.im}; }
  friend CNum mul_i(const CNum& a) { return {-a.im, a.re}; }
  friend Real abs(const CNum& a) { return hypot(a.re, a.im); }
  friend Real norm2(const CNum& a) { return a.re * a.re + a.im * a.im; }
  friend CNum mul_2si(const CNum& a, long e) { return {mul_2si(a.re, e), mul_2si(a.im, e)}; }

  CNum at_prec(mpfr_prec_t p) const { return {re.at_prec(p), im.at_prec(p)}; }
};

CNum cexp(const CNum& z);
CNum csin(const CNum& z);
CNum ccos(const CNum& z);

// Square root with Re >= 0; on the branch cut (Re = 0) the root with
// Im >= 0 is returned.
CNum principal_sqrt(const CNum& z);

// Inverse tangent with -pi/2 < Re <= pi/2. Throws PoleError when z is
// within ctx.eps_tie of +-i.
CNum principal_arctan(const CNum& z, const PrecisionContext& ctx);

// Accepted forms: "3-2i", "1", "-0.5+1.25i", "1.5e-3", "i", "-i", "2i", "3+i".
// Decimal parts may carry an exponent. Throws ParseError with the offset of
// the first offending character.
CNum parse_cnum(const std::string& text, const PrecisionContext& ctx);

// Round-half-even decimal rendering with `digits` significant digits.
std::string format_real(const Real& x, long digits);
std::string format_cnum(const CNum& z, long digits);

}  // namespace ecp

#endif
