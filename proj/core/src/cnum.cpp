#include "ecperiods/cnum.hpp"

#include <cctype>
#include <cstddef>

#include "ecperiods/errors.hpp"

namespace ecp {

namespace {
constexpr mpfr_prec_t kScratchPad = 32;

Real zero_at(mpfr_prec_t p) { return Real(0L, p); }

int sign_of(const Real& x) { return x.sgn() >= 0 ? 1 : -1; }
}  // namespace

CNum cexp(const CNum& z) {
  mpfr_prec_t p = z.prec();
  Real s(p), c(p);
  sin_cos(s, c, z.im);
  Real m = exp(z.re);
  return {m * c, m * s};
}

CNum csin(const CNum& z) {
  mpfr_prec_t p = z.prec();
  Real s(p), c(p), sh(p), ch(p);
  sin_cos(s, c, z.re);
  sinh_cosh(sh, ch, z.im);
  return {s * ch, c * sh};
}

CNum ccos(const CNum& z) {
  mpfr_prec_t p = z.prec();
  Real s(p), c(p), sh(p), ch(p);
  sin_cos(s, c, z.re);
  sinh_cosh(sh, ch, z.im);
  return {c * ch, -(s * sh)};
}

CNum principal_sqrt(const CNum& z) {
  mpfr_prec_t out = z.prec();
  mpfr_prec_t p = out + kScratchPad;
  Real x = z.re.at_prec(p), y = z.im.at_prec(p);
  if (y.is_zero()) {
    if (x.sgn() >= 0) return CNum(sqrt(x), zero_at(p)).at_prec(out);
    return CNum(zero_at(p), sqrt(-x)).at_prec(out);
  }
  Real m = hypot(x, y);
  Real t = sqrt(mul_2si(m + abs(x), -1));
  if (x.sgn() >= 0) {
    Real im = mul_2si(y / t, -1);
    return CNum(std::move(t), std::move(im)).at_prec(out);
  }
  Real re = mul_2si(abs(y) / t, -1);
  Real im = sign_of(y) > 0 ? t : -t;
  return CNum(std::move(re), std::move(im)).at_prec(out);
}

CNum principal_arctan(const CNum& z, const PrecisionContext& ctx) {
  CNum unit_up(0, 1, ctx.work_bits);
  if (abs(z - unit_up) <= ctx.eps_tie || abs(z + unit_up) <= ctx.eps_tie)
    throw PoleError("arctan evaluated at a branch point (z near +-i)");
  mpfr_prec_t out = std::max<mpfr_prec_t>(z.prec(), ctx.work_bits);
  mpfr_prec_t p = out + kScratchPad;
  Real x = z.re.at_prec(p), y = z.im.at_prec(p);
  if (x.is_zero()) x = zero_at(p);  // map -0 to +0 so the cut lands on Re = +pi/2
  Real n2 = x * x + y * y;
  Real re = mul_2si(atan2(mul_2si(x, 1), 1L - n2), -1);
  Real two_y = mul_2si(y, 1);
  Real im = mul_2si(log1p(n2 + two_y) - log1p(n2 - two_y), -2);
  return CNum(std::move(re), std::move(im)).at_prec(out);
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// SIGN? as +1/-1; reports whether a sign character was present.
int parse_sign(Cursor& cur, bool& present) {
  present = true;
  if (cur.eat('+')) return 1;
  if (cur.eat('-')) return -1;
  present = false;
  return 1;
}

// DEC := DIGITS ['.' DIGITS*] EXP? | '.' DIGITS EXP?  with EXP := [eE] SIGN? DIGITS.
// Returns the unsigned literal text, or empty if no DEC starts here.
std::string parse_dec(Cursor& cur) {
  std::size_t start = cur.pos;
  bool any_digits = false;
  while (is_digit(cur.peek())) {
    ++cur.pos;
    any_digits = true;
  }
  if (cur.peek() == '.') {
    std::size_t dot = cur.pos;
    ++cur.pos;
    bool frac_digits = false;
    while (is_digit(cur.peek())) {
      ++cur.pos;
      frac_digits = true;
    }
    if (!any_digits && !frac_digits) {
      cur.pos = dot;
      return {};
    }
    any_digits = any_digits || frac_digits;
  }
  if (!any_digits) return {};
  if (cur.peek() == 'e' || cur.peek() == 'E') {
    std::size_t mark = cur.pos;
    ++cur.pos;
    if (cur.peek() == '+' || cur.peek() == '-') ++cur.pos;
    bool exp_digits = false;
    while (is_digit(cur.peek())) {
      ++cur.pos;
      exp_digits = true;
    }
    if (!exp_digits) cur.pos = mark;  // the 'e' was not an exponent
  }
  return cur.s.substr(start, cur.pos - start);
}

Real real_from_literal(int sign, std::string body, mpfr_prec_t prec) {
  if (!body.empty() && body.front() == '.') body.insert(body.begin(), '0');
  std::size_t dot = body.find('.');
  if (dot != std::string::npos && (dot + 1 == body.size() || !is_digit(body[dot + 1])))
    body.insert(dot + 1, "0");
  Real r(prec);
  std::string text = (sign < 0 ? "-" : "") + body;
  if (mpfr_set_str(r.raw(), text.c_str(), 10, MPFR_RNDN) != 0)
    throw InternalError("mpfr rejected numeric literal '" + text + "'");
  return r;
}

}  // namespace

CNum parse_cnum(const std::string& text, const PrecisionContext& ctx) {
  Cursor cur{text};
  if (cur.done()) throw ParseError("empty input", 0);
  bool sign_present = false;
  int sign1 = parse_sign(cur, sign_present);

  if (cur.eat('i')) {  // SIGN? 'i'
    if (!cur.done()) throw ParseError("trailing characters after 'i'", cur.pos);
    return {zero_at(ctx.work_bits), Real(static_cast<long>(sign1), ctx.work_bits)};
  }

  std::string first = parse_dec(cur);
  if (first.empty()) throw ParseError("expected a decimal literal", cur.pos);

  if (cur.done())  // SIGN? DEC
    return {real_from_literal(sign1, first, ctx.work_bits), zero_at(ctx.work_bits)};

  if (cur.eat('i')) {  // SIGN? DEC 'i'
    if (!cur.done()) throw ParseError("trailing characters after 'i'", cur.pos);
    return {zero_at(ctx.work_bits), real_from_literal(sign1, first, ctx.work_bits)};
  }

  bool sign2_present = false;
  int sign2 = parse_sign(cur, sign2_present);
  if (!sign2_present) throw ParseError("expected '+', '-' or 'i'", cur.pos);
  std::string second = parse_dec(cur);
  if (second.empty()) second = "1";
  if (!cur.eat('i')) throw ParseError("expected 'i'", cur.pos);
  if (!cur.done()) throw ParseError("trailing characters after 'i'", cur.pos);
  return {real_from_literal(sign1, first, ctx.work_bits),
          real_from_literal(sign2, second, ctx.work_bits)};
}

std::string format_real(const Real& x, long digits) {
  if (!x.is_finite()) throw InternalError("format_real on non-finite value");
  if (x.is_zero()) return "0";
  std::size_t n = static_cast<std::size_t>(std::max<long>(digits, 2));
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, n, x.raw(), MPFR_RNDN);
  if (raw == nullptr) throw InternalError("mpfr_get_str failed");
  std::string m(raw);
  mpfr_free_str(raw);
  bool negative = !m.empty() && m[0] == '-';
  if (negative) m.erase(0, 1);
  // value = 0.m * 10^e
  std::string body;
  long len = static_cast<long>(m.size());
  if (e > 0 && e <= len) {
    body = m.substr(0, static_cast<std::size_t>(e));
    if (e < len) body += "." + m.substr(static_cast<std::size_t>(e));
  } else if (e <= 0 && e > -4) {
    body = "0." + std::string(static_cast<std::size_t>(-e), '0') + m;
  } else {
    body = m.substr(0, 1);
    if (len > 1) body += "." + m.substr(1);
    body += "e" + std::to_string(static_cast<long>(e) - 1);
  }
  return negative ? "-" + body : body;
}

std::string format_cnum(const CNum& z, long digits) {
  if (z.im.is_zero()) return format_real(z.re, digits);
  std::string im_part = format_real(abs(z.im), digits) + "i";
  if (z.re.is_zero()) return (z.im.sgn() < 0 ? "-" : "") + im_part;
  return format_real(z.re, digits) + (z.im.sgn() < 0 ? "-" : "+") + im_part;
}

}  // namespace ecp
