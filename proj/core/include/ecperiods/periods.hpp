#ifndef ECPERIODS_PERIODS_HPP
#define ECPERIODS_PERIODS_HPP

#include <array>
#include <optional>
#include <utility>

#include "ecperiods/agm.hpp"
#include "ecperiods/curve.hpp"
#include "ecperiods/lattice.hpp"

namespace ecp {

// Square roots a^2 = e1-e3, b^2 = e1-e2, c^2 = e2-e3 with signs arranged so
// that (a,b), (c,ib) and (a,c) are all good (ties allowed). When that needs
// the e1 <-> e3 relabel, `swapped` is set and permuted_roots reflects it.
struct SignSelection {
  CNum a, b, c;
  CurveRoots permuted_roots;
  bool swapped;
};

// Period triple w1, w2, w3, any two of which form an oriented basis of the
// period lattice; each is a smallest representative of its class mod 2L.
// half_root[j] gives the index (0,1,2) into permuted_roots of the root equal
// to wp(w_{j+1}/2). In the rectangular case w1, w2 are the orthogonal basis
// (w + w')/2, (w - w')/2 and w3 = w is the tied AGM value itself.
struct PeriodTriple {
  CNum w1, w2, w3;
  Lattice lattice;
  bool rectangular;
  std::optional<std::pair<CNum, CNum>> ortho_basis;
  SignSelection selection;
  std::array<int, 3> half_root;
};

SignSelection choose_signs(const CurveRoots& r, const PrecisionContext& ctx);

// w1 = pi/M(a,b), w2 = pi/M(c,ib), w3 = i*pi/M(a,c); on a tie (collinear
// roots) the tied slot contributes w = pi/M(p) and w' = pi/M(p with second
// entry negated), and the basis is orthogonalized from them.
PeriodTriple period_basis(const CurveRoots& r, const PrecisionContext& ctx);

// Real roots e1 > e2 > e3: w1 = pi/M(sqrt(e1-e2), sqrt(e1-e3)) real,
// w2 = i*pi/M(sqrt(e2-e3), sqrt(e1-e3)); real AGM iterations only.
PeriodTriple periods_real_positive_disc(const Real& e1, const Real& e2, const Real& e3,
                                        const PrecisionContext& ctx);

// Real e1, complex pair e2 = conj(e3), Im(e2) > 0. With sqrt(e1-e3) = x+yi
// (x,y > 0) and r = |x+yi|: w1 = pi/M(x,r) real and w2 = (w1 + i*pi/M(y,r))/2,
// so Re(w2/w1) = 1/2; real AGM iterations only.
PeriodTriple periods_real_negative_disc(const Real& e1, const CNum& e2,
                                        const PrecisionContext& ctx);

}  // namespace ecp

#endif
