#ifndef ECPERIODS_REAL_HPP
#define ECPERIODS_REAL_HPP

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "ecperiods/errors.hpp"

namespace ecp {

// Value type around mpfr_t. Every value carries an explicit precision;
// binary operations round to the larger operand precision.
class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, clamp(prec)); }

  Real(long value, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_si(v_, value, MPFR_RNDN);
  }

  Real(double value, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_d(v_, value, MPFR_RNDN);
  }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }

  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }

  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }

  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }

  ~Real() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  int sgn() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool fits_long() const { return mpfr_fits_slong_p(v_, MPFR_RNDN) != 0; }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  static Real pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  // Exact power of two, 2^e.
  static Real pow2(long e, mpfr_prec_t prec = MPFR_PREC_MIN + 2) {
    Real r(prec);
    mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }

  friend Real operator+(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  friend Real operator+(const Real& a, long b) {
    Real r(a.prec());
    mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, long b) {
    Real r(a.prec());
    mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator-(long a, const Real& b) {
    Real r(b.prec());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, long b) {
    Real r(a.prec());
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(const Real& a, long b) {
    Real r(a.prec());
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator/(long a, const Real& b) {
    Real r(b.prec());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }

  Real operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  Real& operator+=(const Real& o) {
    bump(o.prec());
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(const Real& o) {
    bump(o.prec());
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Real& o) {
    bump(o.prec());
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(const Real& o) {
    bump(o.prec());
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) {
    return mpfr_greaterequal_p(a.v_, b.v_) != 0;
  }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
  friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }

#define ECP_REAL_UNARY(name, fn)            \
  friend Real name(const Real& a) {         \
    Real r(a.prec());                       \
    fn(r.v_, a.v_, MPFR_RNDN);              \
    return r;                               \
  }
  ECP_REAL_UNARY(abs, mpfr_abs)
  ECP_REAL_UNARY(log, mpfr_log)
  ECP_REAL_UNARY(log1p, mpfr_log1p)
  ECP_REAL_UNARY(exp, mpfr_exp)
  ECP_REAL_UNARY(atan, mpfr_atan)
  ECP_REAL_UNARY(sin, mpfr_sin)
  ECP_REAL_UNARY(cos, mpfr_cos)
#undef ECP_REAL_UNARY

  // Nonnegative square root; negative input indicates a broken caller.
  friend Real sqrt(const Real& a) {
    if (a.sgn() < 0) throw InternalError("sqrt of negative real");
    Real r(a.prec());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  friend Real hypot(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  friend Real atan2(const Real& y, const Real& x) {
    Real r(join(y, x));
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
  }

  friend void sin_cos(Real& s, Real& c, const Real& a) {
    mpfr_sin_cos(s.v_, c.v_, a.v_, MPFR_RNDN);
  }
  friend void sinh_cosh(Real& s, Real& c, const Real& a) {
    mpfr_sinh_cosh(s.v_, c.v_, a.v_, MPFR_RNDN);
  }

  friend Real floor(const Real& a) {
    Real r(a.prec());
    mpfr_floor(r.v_, a.v_);
    return r;
  }
  friend Real ceil(const Real& a) {
    Real r(a.prec());
    mpfr_ceil(r.v_, a.v_);
    return r;
  }
  // Nearest integer, halves to even.
  friend Real rint(const Real& a) {
    Real r(a.prec());
    mpfr_rint(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  friend Real mul_2si(const Real& a, long e) {
    Real r(a.prec());
    mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }

  friend Real min(const Real& a, const Real& b) { return a <= b ? a : b; }
  friend Real max(const Real& a, const Real& b) { return a >= b ? a : b; }

  // Copy rounded to a different precision.
  Real at_prec(mpfr_prec_t p) const {
    Real r(clamp(p));
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

 private:
  static mpfr_prec_t clamp(mpfr_prec_t p) { return std::max<mpfr_prec_t>(p, MPFR_PREC_MIN); }
  static mpfr_prec_t join(const Real& a, const Real& b) { return std::max(a.prec(), b.prec()); }
  void bump(mpfr_prec_t p) {
    if (p > prec()) mpfr_prec_round(v_, p, MPFR_RNDN);
  }

  mpfr_t v_;
};

}  // namespace ecp

#endif
