#ifndef SIXEQ_CLOSURE_HPP
#define SIXEQ_CLOSURE_HPP

#include <array>
#include <cstddef>

#include "sixeq/eos.hpp"
#include "sixeq/state.hpp"

namespace sixeq {

/// One cell's values of the six evolved fields.
struct CellConserved {
  double r1 = 0.0, r2 = 0.0;
  double q1 = 0.0, q2 = 0.0;
  double en1 = 0.0, en2 = 0.0;
};

/// Kinetic-corrected energy coefficients A_i = (k_i - 1) (en_i - q_i^2/(2 r_i)).
/// With B_i = k_i * pinf_i the per-fluid pressure law reads p = A_i/alpha_i - B_i,
/// so A_i > 0 is required for a physical closure. Callers decide how to treat
/// a non-physical flag.
struct KineticDeficit {
  double a1 = 0.0;
  double a2 = 0.0;

  bool physical() const { return a1 > 0.0 && a2 > 0.0; }
};

KineticDeficit kinetic_deficit(const CellConserved& cell, const FluidEos& eos);

/// Everything the closure determines for one cell.
struct ClosureResult {
  double p = 0.0;
  double alpha1 = 0.0, alpha2 = 0.0;  // alpha2 stored as 1 - alpha1
  double rho1 = 0.0, rho2 = 0.0;
  double v1 = 0.0, v2 = 0.0;
  double e1 = 0.0, e2 = 0.0;
};

/// Partial derivatives of alpha1 with respect to the six conserved
/// variables, evaluated at the closure solution.
struct ClosureSensitivity {
  double d_r1 = 0.0, d_r2 = 0.0;
  double d_q1 = 0.0, d_q2 = 0.0;
  double d_en1 = 0.0, d_en2 = 0.0;

  std::array<double, 6> as_array() const {
    return {d_r1, d_r2, d_q1, d_q2, d_en1, d_en2};
  }
};

/// Relative tolerance to which the returned (p, alpha_i) must satisfy both
/// per-fluid pressure laws.
inline constexpr double kClosureTol = 1e-10;

/// Solves A_1/(p+B_1) + A_2/(p+B_2) = 1 for the unique admissible pressure:
/// the larger root of p^2 + (B1+B2-A1-A2) p + (B1 B2 - A1 B2 - A2 B1) = 0,
/// which is the one with p+B_i > 0 and alpha1 = A1/(p+B1) in (0,1).
/// Requires a1, a2 > 0; throws ClosureError otherwise or if the computed
/// root fails the admissibility checks.
struct PressureAlpha {
  double p = 0.0;
  double alpha1 = 0.0;
};
PressureAlpha solve_pressure_alpha(double a1, double a2, const FluidEos& eos);

/// Independent root finder for the same scalar problem: bisects
/// g(alpha) = A1/alpha - B1 - A2/(1-alpha) + B2, strictly decreasing on
/// (0,1), down to interval width `tol`. Used to cross-check the quadratic.
PressureAlpha bisection_oracle(double a1, double a2, const FluidEos& eos,
                               double tol = 1e-12);

/// Full per-cell closure: velocities, pressure, volume fractions, phase
/// densities and specific energies. Throws ClosureError (with `cell_index`
/// attached) on non-physical input or failed admissibility.
ClosureResult close_cell(const CellConserved& cell, const FluidEos& eos,
                         double r_min,
                         std::size_t cell_index = static_cast<std::size_t>(-1));

/// Implicit-function derivatives of alpha1 at the closure solution.
ClosureSensitivity closure_sensitivity(const CellConserved& cell,
                                       const FluidEos& eos,
                                       const ClosureResult& closed);

/// Convenience overload that closes the cell first.
ClosureSensitivity closure_sensitivity(const CellConserved& cell,
                                       const FluidEos& eos, double r_min);

/// All closure fields of a full state, cell by cell.
struct ClosedFields {
  Field p;
  Field alpha1, alpha2;
  Field rho1, rho2;
  Field v1, v2;
  Field e1, e2;
};

CellConserved extract_cell(const MixtureState& state, std::size_t j);

ClosedFields close_state(const MixtureState& state, const FluidEos& eos,
                         double r_min);

}  // namespace sixeq

#endif  // SIXEQ_CLOSURE_HPP
