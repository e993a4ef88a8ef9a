#ifndef ECPERIODS_LATTICE_HPP
#define ECPERIODS_LATTICE_HPP

#include <optional>

#include "ecperiods/cnum.hpp"
#include "ecperiods/precision.hpp"

namespace ecp {

// Rank-2 lattice Z*w1 + Z*w2; constructors guarantee Im(w2/w1) > 0.
struct Lattice {
  CNum w1, w2;
};

struct Coordinates {
  Real u, v;
};

enum class ReduceMode { Centered, Fundamental };

// Orients (wa, wb), negating wb when needed. Throws DegenerateLattice when a
// vector vanishes or the pair is numerically R-linearly dependent.
Lattice make_oriented(const CNum& wa, const CNum& wb, const PrecisionContext& ctx);

// Lagrange-Gauss reduction: |w1| <= |w2|, |Re(w2/w1)| <= 1/2, orientation kept.
Lattice reduce_basis(const Lattice& l, const PrecisionContext& ctx);

// Real coefficients with z = u*w1 + v*w2.
Coordinates coordinates(const CNum& z, const Lattice& l, const PrecisionContext& ctx);

// Centered: coordinates of the result lie in (-1/2, 1/2] (boundary maps to
// +1/2). Fundamental: they lie in [0, 1).
CNum reduce_mod(const CNum& z, const Lattice& l, ReduceMode mode, const PrecisionContext& ctx);

// Both coordinates within tol of integers; tol defaults to 2^(-work_bits/2).
bool is_member(const CNum& z, const Lattice& l, const PrecisionContext& ctx,
               const Real* tol = nullptr);

// Member with coprime integer coordinates.
bool is_primitive(const CNum& z, const Lattice& l, const PrecisionContext& ctx,
                  const Real* tol = nullptr);

// True when the reduced basis ratio is purely imaginary within eps_tie; in
// that case *ortho (if given) receives a basis with Re(w2/w1) = 0.
bool is_rectangular(const Lattice& l, const PrecisionContext& ctx, Lattice* ortho = nullptr);

}  // namespace ecp

#endif
