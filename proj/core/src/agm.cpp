#include "ecperiods/agm.hpp"

#include "ecperiods/errors.hpp"

namespace ecp {

namespace {

void validate_pair(const AgmPair& p, const PrecisionContext& ctx) {
  Real scale = max(abs(p.a), abs(p.b));
  if (scale.is_zero()) throw DegeneratePair("agm of (0, 0)");
  if (abs(p.a) <= ctx.eps_tie * scale || abs(p.b) <= ctx.eps_tie * scale)
    throw DegeneratePair("agm with a zero operand");
  if (abs(p.a - p.b) <= ctx.eps_tie * scale || abs(p.a + p.b) <= ctx.eps_tie * scale)
    throw DegeneratePair("agm with a = +-b");
}

AgmPair step_impl(const AgmPair& p, bool flip, const PrecisionContext& ctx, bool& tie) {
  CNum a1 = mul_2si(p.a + p.b, -1);
  CNum b1 = principal_sqrt(p.a * p.b);
  if (a1.is_zero() || b1.is_zero()) throw DegeneratePair("agm sequence collapsed to zero");
  switch (is_good({a1, b1}, ctx)) {
    case GoodState::Good:
      break;
    case GoodState::Bad:
      b1 = -b1;
      break;
    case GoodState::Tie: {
      tie = true;
      // Im(a1/b1) > 0 <=> Im(a1 * conj(b1)) > 0
      Real cross = a1.im * b1.re - a1.re * b1.im;
      if (cross.sgn() < 0) b1 = -b1;
      break;
    }
  }
  if (flip) b1 = -b1;
  return {std::move(a1), std::move(b1)};
}

bool converged(const AgmPair& p, const PrecisionContext& ctx) {
  return abs(p.a - p.b) <= ctx.eps_conv * abs(p.a);
}

AgmResult run(AgmPair p, const SignSet& s, const PrecisionContext& ctx) {
  validate_pair(p, ctx);
  long last_scheduled = s.empty() ? 0 : *s.rbegin();
  if (last_scheduled < 0 || (!s.empty() && *s.begin() < 1))
    throw Error("schedule indices must be positive");
  bool tie = false;
  long n = 0;
  while (true) {
    if (n >= ctx.iteration_cap) throw NonConvergence("agm iteration cap exceeded");
    ++n;
    p = step_impl(p, s.count(n) > 0, ctx, tie);
    if (n >= last_scheduled && converged(p, ctx)) {
      ++n;
      p = step_impl(p, false, ctx, tie);
      return {p.a, n, tie};
    }
  }
}

}  // namespace

GoodState is_good(const AgmPair& p, const PrecisionContext& ctx) {
  Real d = abs(p.a - p.b);
  Real s = abs(p.a + p.b);
  if (abs(d - s) <= ctx.eps_tie * s) return GoodState::Tie;
  return d < s ? GoodState::Good : GoodState::Bad;
}

AgmPair agm_step(const AgmPair& p, bool flip, const PrecisionContext& ctx) {
  bool tie = false;
  return step_impl(p, flip, ctx, tie);
}

AgmResult agm_optimal(const AgmPair& p, const PrecisionContext& ctx) {
  return run(p, {}, ctx);
}

AgmResult agm_scheduled(const AgmPair& p, const SignSet& s, const PrecisionContext& ctx) {
  return run(p, s, ctx);
}

Real real_agm(const Real& a, const Real& b, const PrecisionContext& ctx) {
  if (!(a > 0L) || !(b > 0L)) throw DegeneratePair("real agm needs positive operands");
  Real x = a.at_prec(ctx.work_bits), y = b.at_prec(ctx.work_bits);
  for (long n = 0; n < ctx.iteration_cap; ++n) {
    Real m = mul_2si(x + y, -1);
    y = sqrt(x * y);
    x = m;
    if (abs(x - y) <= ctx.eps_conv * x) return mul_2si(x + y, -1);
  }
  throw NonConvergence("real agm iteration cap exceeded");
}

CNum align_good(const CNum& x, const CNum& y, const PrecisionContext& ctx) {
  switch (is_good({x, y}, ctx)) {
    case GoodState::Good:
      return y;
    case GoodState::Bad:
      return -y;
    case GoodState::Tie: {
      Real cross = x.im * y.re - x.re * y.im;  // Im(x * conj(y))
      return cross.sgn() >= 0 ? y : -y;
    }
  }
  throw InternalError("unreachable");
}

}  // namespace ecp
