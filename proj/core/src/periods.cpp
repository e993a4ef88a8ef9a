#include "ecperiods/periods.hpp"

#include "ecperiods/errors.hpp"

namespace ecp {

namespace {

void require_selection_valid(const SignSelection& s, const PrecisionContext& ctx) {
  if (is_good({s.a, s.b}, ctx) == GoodState::Bad ||
      is_good({s.c, mul_i(s.b)}, ctx) == GoodState::Bad ||
      is_good({s.a, s.c}, ctx) == GoodState::Bad)
    throw InternalError("sign selection failed its defining conditions");
}

CNum pi_over(const AgmResult& r, const PrecisionContext& ctx) {
  return CNum(Real::pi(ctx.work_bits), Real(0L, ctx.work_bits)) / r.m;
}

// True when v equals s or -s to within half-precision slack.
bool matches_up_to_sign(const CNum& v, const CNum& s, const PrecisionContext& ctx) {
  Real tol = Real::pow2(-static_cast<long>(ctx.work_bits / 2)) * abs(s);
  return abs(v - s) <= tol || abs(v + s) <= tol;
}

}  // namespace

SignSelection choose_signs(const CurveRoots& r, const PrecisionContext& ctx) {
  require_distinct_roots(r, ctx);
  CNum a = principal_sqrt(r.e1 - r.e3);
  CNum b = align_good(a, principal_sqrt(r.e1 - r.e2), ctx);
  CNum c = align_good(a, principal_sqrt(r.e2 - r.e3), ctx);

  SignSelection sel{a, b, c, r, false};
  if (is_good({c, mul_i(b)}, ctx) == GoodState::Bad) {
    sel = SignSelection{mul_i(a), mul_i(c), mul_i(b), CurveRoots{r.e3, r.e2, r.e1}, true};
  }
  require_selection_valid(sel, ctx);
  return sel;
}

PeriodTriple period_basis(const CurveRoots& r, const PrecisionContext& ctx) {
  SignSelection sel = choose_signs(r, ctx);

  const AgmPair pairs[3] = {
      {sel.a, sel.b}, {sel.c, mul_i(sel.b)}, {sel.a, sel.c}};
  int tie_slot = -1;
  for (int j = 0; j < 3; ++j) {
    if (is_good(pairs[j], ctx) == GoodState::Tie) {
      if (tie_slot >= 0) throw InternalError("two tied period pairs");
      tie_slot = j;
    }
  }

  CNum slot[3] = {pi_over(agm_optimal(pairs[0], ctx), ctx),
                  pi_over(agm_optimal(pairs[1], ctx), ctx),
                  mul_i(pi_over(agm_optimal(pairs[2], ctx), ctx))};

  if (tie_slot < 0) {
    Lattice lat = make_oriented(slot[0], slot[1], ctx);
    return {slot[0], slot[1], slot[2], lat, false, std::nullopt, sel, {0, 1, 2}};
  }

  // Collinear roots: the tied pair contributes both square-root choices, and
  // their half sum / half difference give the orthogonal basis.
  const AgmPair flipped[3] = {
      {sel.a, -sel.b}, {sel.c, -mul_i(sel.b)}, {sel.a, -sel.c}};
  CNum w = slot[tie_slot];
  CNum wf = tie_slot == 2 ? mul_i(pi_over(agm_optimal(flipped[2], ctx), ctx))
                          : pi_over(agm_optimal(flipped[tie_slot], ctx), ctx);
  CNum o1 = mul_2si(w + wf, -1);
  CNum o2 = mul_2si(w - wf, -1);

  std::array<int, 3> half{-1, -1, -1};
  half[2] = tie_slot;
  for (int j = 0; j < 3; ++j) {
    if (j == tie_slot) continue;
    if (matches_up_to_sign(slot[j], o1, ctx)) {
      if (half[0] >= 0) throw InternalError("orthogonal basis matched twice");
      half[0] = j;
    } else if (matches_up_to_sign(slot[j], o2, ctx)) {
      half[1] = j;
    } else {
      throw InternalError("tied period triple is not orthogonal");
    }
  }
  if (half[0] < 0 || half[1] < 0) throw InternalError("orthogonal basis left unmatched");

  Lattice lat = make_oriented(o1, o2, ctx);
  return {o1, o2, w, lat, true, std::make_pair(o1, o2), sel, half};
}

PeriodTriple periods_real_positive_disc(const Real& e1, const Real& e2, const Real& e3,
                                        const PrecisionContext& ctx) {
  Real sc = max(abs(e1), max(abs(e2), abs(e3)));
  if (sc.is_zero() || !(e1 - e2 > ctx.eps_tie * sc) || !(e2 - e3 > ctx.eps_tie * sc))
    throw DegenerateCurve("roots must satisfy e1 > e2 > e3");
  mpfr_prec_t p = ctx.work_bits;
  Real sa = sqrt(e1.at_prec(p) - e3.at_prec(p));
  Real sb = sqrt(e1.at_prec(p) - e2.at_prec(p));
  Real sc2 = sqrt(e2.at_prec(p) - e3.at_prec(p));
  Real pi = Real::pi(p);
  Real zero(0L, p);

  CNum w1(pi / real_agm(sb, sa, ctx), zero);
  CNum w2(zero, pi / real_agm(sc2, sa, ctx));
  CNum w3 = w1 + w2;

  CurveRoots roots{CNum(e1.at_prec(p), zero), CNum(e2.at_prec(p), zero), CNum(e3.at_prec(p), zero)};
  SignSelection sel{CNum(sa, zero), CNum(sb, zero), CNum(sc2, zero), roots, false};
  Lattice lat{w1, w2};
  return {w1, w2, w3, lat, true, std::make_pair(w1, w2), sel, {0, 2, 1}};
}

PeriodTriple periods_real_negative_disc(const Real& e1, const CNum& e2,
                                        const PrecisionContext& ctx) {
  Real sc = max(abs(e1), abs(e2));
  if (sc.is_zero() || !(e2.im > ctx.eps_tie * sc))
    throw DegenerateCurve("e2 must have positive imaginary part");
  mpfr_prec_t p = ctx.work_bits;
  CNum e1c(e1.at_prec(p), Real(0L, p));
  CNum e2c = e2.at_prec(p);
  CNum e3c = conj(e2c);

  CNum a0 = principal_sqrt(e1c - e3c);
  if (a0.re.sgn() <= 0 || a0.im.sgn() <= 0)
    throw InternalError("sqrt(e1 - e3) left the open first quadrant");
  Real rr = abs(a0);
  Real pi = Real::pi(p);
  Real zero(0L, p);

  Real wplus = pi / real_agm(a0.re, rr, ctx);
  Real wminus = pi / real_agm(a0.im, rr, ctx);
  CNum w1(wplus, zero);
  CNum w2(mul_2si(wplus, -1), mul_2si(wminus, -1));
  CNum w3 = w2 - w1;

  CurveRoots roots{e1c, e2c, e3c};
  SignSelection sel{a0, conj(a0), principal_sqrt(e2c - e3c), roots, false};
  Lattice lat{w1, w2};
  // w1/2 sits over e1, w2/2 over the lower root conj(e2), w3/2 over e2
  return {w1, w2, w3, lat, false, std::nullopt, sel, {0, 2, 1}};
}

}  // namespace ecp
