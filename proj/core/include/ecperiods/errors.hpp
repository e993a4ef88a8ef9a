#ifndef ECPERIODS_ERRORS_HPP
#define ECPERIODS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ecp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rejected input text; `position` is the byte offset of the offending character.
struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Evaluation requested at or too close to a pole / branch point.
struct PoleError : Error {
  using Error::Error;
};

// AGM input with a = 0, b = 0 or a = +-b, or a sequence that collapsed to zero.
struct DegeneratePair : Error {
  using Error::Error;
};

// An iteration exceeded its cap without meeting its convergence test.
struct NonConvergence : Error {
  using Error::Error;
};

// Basis vectors are zero or (numerically) real-linearly dependent.
struct DegenerateLattice : Error {
  using Error::Error;
};

// Roots not pairwise distinct beyond tolerance.
struct DegenerateCurve : Error {
  using Error::Error;
};

// Vanishing discriminant: g2^3 - 27*g3^2 = 0 within tolerance.
struct SingularCurve : Error {
  using Error::Error;
};

// A 2-torsion point (y = 0) was passed to the generic logarithm.
struct TwoTorsionInput : Error {
  using Error::Error;
};

// The point at infinity was passed where an affine point is required.
struct InfinityInput : Error {
  using Error::Error;
};

// Real point does not lie on a component reachable by the requested real path.
struct ComponentError : Error {
  using Error::Error;
};

// Point coordinates do not satisfy the curve equation within tolerance.
struct OffCurve : Error {
  using Error::Error;
};

// A scheduled AGM value landed outside its predicted coset.
struct CosetViolation : Error {
  using Error::Error;
};

// A postcondition that should hold for every valid input failed.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace ecp

#endif
