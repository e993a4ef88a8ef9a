// Command line front end: optimal complex AGM, period lattices of complex
// elliptic curves, elliptic logarithms, and the verification oracles.
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "ecperiods/agm.hpp"
#include "ecperiods/agm_values.hpp"
#include "ecperiods/cnum.hpp"
#include "ecperiods/curve.hpp"
#include "ecperiods/elog.hpp"
#include "ecperiods/errors.hpp"
#include "ecperiods/lattice.hpp"
#include "ecperiods/periods.hpp"
#include "ecperiods/precision.hpp"
#include "ecperiods/weierstrass.hpp"
#include "json.hpp"

using ecp::CNum;
using ecp::Real;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Options {
  long digits = 100;
  bool json = false;
};

ordered_json jnum(const CNum& z, long digits) {
  return {{"re", ecp::format_real(z.re, digits)}, {"im", ecp::format_real(z.im, digits)}};
}

std::string tnum(const CNum& z, long digits) { return ecp::format_cnum(z, digits); }

void emit(const Options& o, const ordered_json& j, const std::vector<std::string>& text) {
  if (o.json) {
    std::fputs(j.dump(2).c_str(), stdout);
    std::fputc('\n', stdout);
  } else {
    for (const std::string& line : text) {
      std::fputs(line.c_str(), stdout);
      std::fputc('\n', stdout);
    }
  }
}

Real decpow(long e, mpfr_prec_t p) {
  Real t(10L, p);
  mpfr_pow_si(t.raw(), t.raw(), e, MPFR_RNDN);
  return t;
}

// short scientific rendering for diagnostics
std::string short_err(const Real& x) { return ecp::format_real(x, 3); }

ecp::SignSet parse_schedule(const std::string& text) {
  ecp::SignSet out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    if (end == pos) throw ecp::ParseError("empty schedule entry", pos);
    long value = 0;
    for (std::size_t k = pos; k < end; ++k) {
      char c = text[k];
      if (c < '0' || c > '9') throw ecp::ParseError("schedule entries are positive integers", k);
      value = value * 10 + (c - '0');
      if (value > 1000000) throw ecp::ParseError("schedule entry too large", pos);
    }
    if (value < 1) throw ecp::ParseError("schedule entries are positive integers", pos);
    out.insert(value);
    pos = end + (end < text.size() ? 1 : 0);
  }
  return out;
}

// --roots | --g-invariants | --a-invariants, resolved to a root triple.
struct CurveArgs {
  std::vector<std::string> roots;
  std::vector<std::string> ginv;
  std::vector<std::string> ainv;
};

struct ResolvedCurve {
  ecp::CurveRoots roots;
  // long Weierstrass input needs points moved to the 4X^3 - g2 X - g3 frame
  bool long_model = false;
  CNum a1, a3, shift;
};

void add_curve_options(CLI::App* cmd, CurveArgs& args) {
  auto* r = cmd->add_option("--roots", args.roots, "roots e1 e2 e3 of 4(X-e1)(X-e2)(X-e3)")
                ->expected(3);
  auto* g = cmd->add_option("--g-invariants", args.ginv, "g2 g3 of Y^2 = 4X^3 - g2 X - g3")
                ->expected(2);
  auto* a = cmd->add_option("--a-invariants", args.ainv,
                            "a1 a2 a3 a4 a6 of the long Weierstrass equation")
                ->expected(5);
  r->excludes(g)->excludes(a);
  g->excludes(a);
}

ResolvedCurve resolve_curve(const CurveArgs& args, const ecp::PrecisionContext& ctx) {
  ResolvedCurve out{{CNum(ctx.work_bits), CNum(ctx.work_bits), CNum(ctx.work_bits)},
                    false,
                    CNum(ctx.work_bits),
                    CNum(ctx.work_bits),
                    CNum(ctx.work_bits)};
  if (!args.roots.empty()) {
    out.roots = {ecp::parse_cnum(args.roots[0], ctx), ecp::parse_cnum(args.roots[1], ctx),
                 ecp::parse_cnum(args.roots[2], ctx)};
    ecp::require_distinct_roots(out.roots, ctx);
    return out;
  }
  if (!args.ginv.empty()) {
    ecp::CurveInvariants inv{ecp::parse_cnum(args.ginv[0], ctx),
                             ecp::parse_cnum(args.ginv[1], ctx)};
    out.roots = ecp::roots_from_invariants(inv, ctx);
    return out;
  }
  if (!args.ainv.empty()) {
    ecp::WeierstrassCoeffs w{ecp::parse_cnum(args.ainv[0], ctx), ecp::parse_cnum(args.ainv[1], ctx),
                             ecp::parse_cnum(args.ainv[2], ctx), ecp::parse_cnum(args.ainv[3], ctx),
                             ecp::parse_cnum(args.ainv[4], ctx)};
    ecp::CurveInvariants inv = ecp::invariants_from_coeffs(w, ctx);
    out.roots = ecp::roots_from_invariants(inv, ctx);
    out.long_model = true;
    out.a1 = w.a1;
    out.a3 = w.a3;
    out.shift = (w.a1 * w.a1 + mul_2si(w.a2, 2)) / 12L;  // b2 / 12
    return out;
  }
  throw ecp::Error("one of --roots, --g-invariants, --a-invariants is required");
}

// X = x + b2/12, Y = 2y + a1 x + a3 maps the long model onto 4X^3 - g2 X - g3
ecp::Point resolve_point(const ResolvedCurve& c, const std::vector<std::string>& xy,
                         const ecp::PrecisionContext& ctx) {
  CNum x = ecp::parse_cnum(xy[0], ctx);
  CNum y = ecp::parse_cnum(xy[1], ctx);
  if (!c.long_model) return ecp::Point::affine(x, y);
  return ecp::Point::affine(x + c.shift, mul_2si(y, 1) + c.a1 * x + c.a3);
}

// mean of the roots: wp lives on the sum-zero translate, user coordinates
// differ by this shift
CNum root_mean(const ecp::CurveRoots& r) { return (r.e1 + r.e2 + r.e3) / 3L; }

// generic logarithm, routing 2-torsion points to the half-period formula
ecp::ElogResult elog_any(const ecp::CurveRoots& r, const ecp::Point& p,
                         const ecp::PrecisionContext& ctx) {
  try {
    return ecp::elog(r, p, ctx);
  } catch (const ecp::TwoTorsionInput&) {
    int which = 1;
    Real best = abs(p.x - r.e1);
    if (abs(p.x - r.e2) < best) {
      best = abs(p.x - r.e2);
      which = 2;
    }
    if (abs(p.x - r.e3) < best) which = 3;
    return ecp::elog_2torsion(r, which, ctx);
  }
}

int run_agm(const std::string& a, const std::string& b, const std::string& schedule,
            const Options& o, const ecp::PrecisionContext& ctx) {
  ecp::AgmPair pair{ecp::parse_cnum(a, ctx), ecp::parse_cnum(b, ctx)};
  ecp::SignSet s = parse_schedule(schedule);
  ecp::AgmResult res = s.empty() ? ecp::agm_optimal(pair, ctx) : ecp::agm_scheduled(pair, s, ctx);
  ordered_json j{{"m", jnum(res.m, o.digits)}, {"iterations", res.iterations}};
  emit(o, j,
       {"m = " + tnum(res.m, o.digits), "iterations = " + std::to_string(res.iterations)});
  return 0;
}

int run_periods(const CurveArgs& args, const Options& o, const ecp::PrecisionContext& ctx) {
  ResolvedCurve c = resolve_curve(args, ctx);
  ecp::PeriodTriple pt = ecp::period_basis(c.roots, ctx);
  ordered_json j{{"w1", jnum(pt.w1, o.digits)},
                 {"w2", jnum(pt.w2, o.digits)},
                 {"w3", jnum(pt.w3, o.digits)},
                 {"rectangular", pt.rectangular}};
  std::vector<std::string> text{"w1 = " + tnum(pt.w1, o.digits), "w2 = " + tnum(pt.w2, o.digits),
                                "w3 = " + tnum(pt.w3, o.digits),
                                std::string("rectangular = ") +
                                    (pt.rectangular ? "true" : "false")};
  if (pt.ortho_basis) {
    j["ortho_basis"] = {jnum(pt.ortho_basis->first, o.digits),
                        jnum(pt.ortho_basis->second, o.digits)};
    text.push_back("ortho = " + tnum(pt.ortho_basis->first, o.digits) + " ; " +
                   tnum(pt.ortho_basis->second, o.digits));
  } else {
    j["ortho_basis"] = nullptr;
  }
  emit(o, j, text);
  return 0;
}

int run_elog(const CurveArgs& args, const std::vector<std::string>& xy, const std::string& reduce,
             const Options& o, const ecp::PrecisionContext& ctx) {
  ResolvedCurve c = resolve_curve(args, ctx);
  ecp::Point p = resolve_point(c, xy, ctx);
  ecp::ElogResult res = elog_any(c.roots, p, ctx);
  CNum z = res.z;
  ecp::Coordinates coords = res.coords;
  if (reduce == "fundamental") {
    ecp::PeriodTriple pt = ecp::period_basis(c.roots, ctx);
    z = ecp::reduce_mod(res.z, pt.lattice, ecp::ReduceMode::Fundamental, ctx);
    coords = ecp::coordinates(z, pt.lattice, ctx);
  }
  ordered_json j{{"z", jnum(z, o.digits)},
                 {"coords",
                  {{"u", ecp::format_real(coords.u, o.digits)},
                   {"v", ecp::format_real(coords.v, o.digits)}}},
                 {"m", jnum(res.m, o.digits)},
                 {"iterations", res.iterations}};
  emit(o, j,
       {"z = " + tnum(z, o.digits), "u = " + ecp::format_real(coords.u, o.digits),
        "v = " + ecp::format_real(coords.v, o.digits), "m = " + tnum(res.m, o.digits),
        "iterations = " + std::to_string(res.iterations)});
  return 0;
}

int run_wp(const CurveArgs& args, const std::string& ztext, const Options& o,
           const ecp::PrecisionContext& ctx) {
  ResolvedCurve c = resolve_curve(args, ctx);
  CNum z = ecp::parse_cnum(ztext, ctx);
  ecp::PeriodTriple pt = ecp::period_basis(c.roots, ctx);
  ecp::WpValue v = ecp::wp(z, pt.lattice, ctx);
  CNum p = v.p + root_mean(c.roots);  // back into the supplied root frame
  ordered_json j{{"p", jnum(p, o.digits)}, {"p_prime", jnum(v.p_prime, o.digits)}};
  emit(o, j, {"p = " + tnum(p, o.digits), "p_prime = " + tnum(v.p_prime, o.digits)});
  return 0;
}

int run_agm_values(const std::string& a, const std::string& b, const std::string& schedule,
                   int sign_a, int sign_b, const Options& o, const ecp::PrecisionContext& ctx) {
  ecp::CosetReport rep = ecp::classify_agm_value(ecp::parse_cnum(a, ctx), ecp::parse_cnum(b, ctx),
                                                 parse_schedule(schedule), sign_a, sign_b, ctx);
  ordered_json j{{"value", jnum(rep.value, o.digits)},
                 {"w", jnum(rep.w, o.digits)},
                 {"wp", jnum(rep.wp, o.digits)},
                 {"u", rep.u},
                 {"v", rep.v},
                 {"residue_u", rep.residue_u},
                 {"residue_v", rep.residue_v},
                 {"expected_u", rep.expected_u},
                 {"expected_v", rep.expected_v},
                 {"matches", rep.matches},
                 {"primitive", rep.primitive},
                 {"err", short_err(rep.err)}};
  emit(o, j,
       {"value = " + tnum(rep.value, o.digits), "w = " + tnum(rep.w, o.digits),
        "wp = " + tnum(rep.wp, o.digits),
        "u = " + std::to_string(rep.u) + ", v = " + std::to_string(rep.v),
        "residues = (" + std::to_string(rep.residue_u) + ", " + std::to_string(rep.residue_v) +
            "), expected (" + std::to_string(rep.expected_u) + ", " +
            std::to_string(rep.expected_v) + ")",
        std::string("matches = ") + (rep.matches ? "true" : "false"),
        std::string("primitive = ") + (rep.primitive ? "true" : "false"),
        "err = " + short_err(rep.err)});
  return 0;
}

int run_verify(const CurveArgs& args, const std::vector<std::string>& xy, const Options& o,
               const ecp::PrecisionContext& ctx) {
  ResolvedCurve c = resolve_curve(args, ctx);
  ecp::PeriodTriple pt = ecp::period_basis(c.roots, ctx);
  CNum mean = root_mean(c.roots);
  Real tol = decpow(-o.digits / 2, ctx.work_bits);
  Real one(1L, ctx.work_bits);

  struct Check {
    std::string name;
    Real err;
    bool pass;
  };
  std::vector<Check> checks;
  auto add = [&](const std::string& name, const Real& err) {
    checks.push_back({name, err, err <= tol});
  };

  // wp at the half periods must return the roots with vanishing derivative
  const ecp::CurveRoots& pr = pt.selection.permuted_roots;
  const CNum* roots[3] = {&pr.e1, &pr.e2, &pr.e3};
  const CNum* halves[3] = {&pt.w1, &pt.w2, &pt.w3};
  for (int jx = 0; jx < 3; ++jx) {
    ecp::WpValue v = ecp::wp(mul_2si(*halves[jx], -1), pt.lattice, ctx);
    const CNum& want = *roots[pt.half_root[jx]];
    Real sc = abs(want) + one;
    add("half-period w" + std::to_string(jx + 1), abs(v.p + mean - want) / sc);
    add("half-period derivative w" + std::to_string(jx + 1), abs(v.p_prime) / sc);
  }

  // the lattice reproduces the invariants of the sum-zero translate
  ecp::CurveInvariants want = ecp::invariants_from_roots(c.roots, ctx);
  ecp::CurveInvariants got = ecp::lattice_invariants(pt.lattice, ctx);
  Real isc = abs(want.g2) + abs(want.g3) + one;
  add("lattice invariants", (abs(got.g2 - want.g2) + abs(got.g3 - want.g3)) / isc);

  // period relation: w1 = w2 + w3, or w3 = w1 + w2 on a rectangular lattice
  CNum rel = pt.rectangular ? pt.w3 - pt.w1 - pt.w2 : pt.w1 - pt.w2 - pt.w3;
  add("period relation", abs(rel) / (abs(pt.w1) + abs(pt.w2)));

  if (!xy.empty()) {
    ecp::Point p = resolve_point(c, xy, ctx);
    ecp::ElogResult res = elog_any(c.roots, p, ctx);
    ecp::WpValue v = ecp::wp(res.z, pt.lattice, ctx);
    add("log round-trip x", abs(v.p + mean - p.x) / (abs(p.x) + one));
    add("log round-trip y", abs(v.p_prime - p.y) / (abs(p.y) + one));
  }

  bool ok = true;
  ordered_json jchecks = ordered_json::array();
  std::vector<std::string> text;
  for (const Check& ck : checks) {
    ok = ok && ck.pass;
    jchecks.push_back(
        {{"name", ck.name}, {"error", short_err(ck.err)}, {"pass", ck.pass}});
    text.push_back((ck.pass ? "ok   " : "FAIL ") + ck.name + " (err = " + short_err(ck.err) +
                   ")");
  }
  text.push_back(ok ? "all checks passed" : "verification failed");
  emit(o, ordered_json{{"checks", jchecks}, {"ok", ok}}, text);
  return ok ? 0 : 1;
}

int fail_json(const ecp::Error& e) {
  const char* kind = "error";
  int code = 2;
  if (dynamic_cast<const ecp::ParseError*>(&e)) {
    kind = "parse";
  } else if (dynamic_cast<const ecp::NonConvergence*>(&e)) {
    kind = "non-convergence";
    code = 3;
  } else if (dynamic_cast<const ecp::InternalError*>(&e)) {
    kind = "internal";
    code = 3;
  } else if (dynamic_cast<const ecp::CosetViolation*>(&e)) {
    kind = "coset-violation";
    code = 3;
  } else if (dynamic_cast<const ecp::DegeneratePair*>(&e)) {
    kind = "degenerate-pair";
  } else if (dynamic_cast<const ecp::PoleError*>(&e)) {
    kind = "pole";
  } else if (dynamic_cast<const ecp::DegenerateLattice*>(&e)) {
    kind = "degenerate-lattice";
  } else if (dynamic_cast<const ecp::DegenerateCurve*>(&e)) {
    kind = "degenerate-curve";
  } else if (dynamic_cast<const ecp::SingularCurve*>(&e)) {
    kind = "singular-curve";
  } else if (dynamic_cast<const ecp::TwoTorsionInput*>(&e)) {
    kind = "two-torsion";
  } else if (dynamic_cast<const ecp::InfinityInput*>(&e)) {
    kind = "infinity";
  } else if (dynamic_cast<const ecp::ComponentError*>(&e)) {
    kind = "component";
  } else if (dynamic_cast<const ecp::OffCurve*>(&e)) {
    kind = "off-curve";
  }
  ordered_json j{{"error", kind}, {"message", e.what()}};
  if (const auto* pe = dynamic_cast<const ecp::ParseError*>(&e))
    j["position"] = static_cast<long>(pe->position);
  std::fputs(j.dump().c_str(), stderr);
  std::fputc('\n', stderr);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimal complex AGM, period lattices and elliptic logarithms"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--digits", opt.digits, "significant decimal digits")->capture_default_str();
  app.add_flag("--json", opt.json, "emit a JSON object instead of text");

  std::string agm_a, agm_b, schedule;
  CLI::App* agm = app.add_subcommand("agm", "arithmetic-geometric mean of two complex numbers");
  agm->fallthrough();
  agm->add_option("a", agm_a, "first operand")->required();
  agm->add_option("b", agm_b, "second operand")->required();
  agm->add_option("--schedule", schedule, "iterations taking the non-principal root, e.g. 1,3");

  CurveArgs periods_args;
  CLI::App* periods = app.add_subcommand("periods", "period lattice basis of a curve");
  periods->fallthrough();
  add_curve_options(periods, periods_args);

  CurveArgs elog_args;
  std::vector<std::string> elog_point;
  std::string reduce = "strip";
  CLI::App* elogc = app.add_subcommand("elog", "elliptic logarithm of a point");
  elogc->fallthrough();
  add_curve_options(elogc, elog_args);
  elogc->add_option("--point", elog_point, "affine point x y")->expected(2)->required();
  elogc->add_option("--reduce", reduce, "strip (default) or fundamental")
      ->check(CLI::IsMember({"strip", "fundamental"}));

  CurveArgs wp_args;
  std::string wp_z;
  CLI::App* wpc = app.add_subcommand("wp", "Weierstrass function of the curve's lattice");
  wpc->fallthrough();
  add_curve_options(wpc, wp_args);
  wpc->add_option("--z", wp_z, "evaluation point")->required();

  std::string av_a, av_b, av_schedule;
  int sign_a = 1, sign_b = 1;
  CLI::App* avc = app.add_subcommand("agm-values", "locate pi/M_S over the period basis");
  avc->fallthrough();
  avc->add_option("a", av_a, "first operand")->required();
  avc->add_option("b", av_b, "second operand")->required();
  avc->add_option("--schedule", av_schedule, "flipped iterations, e.g. 1,3");
  avc->add_option("--sign-a", sign_a, "sign of the first operand, +1 or -1");
  avc->add_option("--sign-b", sign_b, "sign of the second operand, +1 or -1");

  CurveArgs verify_args;
  std::vector<std::string> verify_point;
  CLI::App* verify = app.add_subcommand("verify", "run the built-in consistency oracles");
  verify->fallthrough();
  add_curve_options(verify, verify_args);
  verify->add_option("--point", verify_point, "optional affine point x y")->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    ordered_json j{{"error", "usage"}, {"message", e.what()}};
    std::fputs(j.dump().c_str(), stderr);
    std::fputc('\n', stderr);
    return 2;
  }

  try {
    ecp::PrecisionContext ctx = ecp::make_context(opt.digits);
    if (app.got_subcommand(agm)) return run_agm(agm_a, agm_b, schedule, opt, ctx);
    if (app.got_subcommand(periods)) return run_periods(periods_args, opt, ctx);
    if (app.got_subcommand(elogc)) return run_elog(elog_args, elog_point, reduce, opt, ctx);
    if (app.got_subcommand(wpc)) return run_wp(wp_args, wp_z, opt, ctx);
    if (app.got_subcommand(avc))
      return run_agm_values(av_a, av_b, av_schedule, sign_a, sign_b, opt, ctx);
    if (app.got_subcommand(verify)) return run_verify(verify_args, verify_point, opt, ctx);
  } catch (const ecp::Error& e) {
    return fail_json(e);
  }
  return 0;
}
