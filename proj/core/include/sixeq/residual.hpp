#ifndef SIXEQ_RESIDUAL_HPP
#define SIXEQ_RESIDUAL_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "sixeq/integrate.hpp"
#include "sixeq/test_function.hpp"

namespace sixeq {

/// Weak-form residuals of the six balance equations against one test
/// function. Orientation: each residual equals the weak pairing of the
/// equation's defect with psi, so a run with mass source kappa1 yields
/// res_mass ~= kappa1 * integral(psi).
struct ResidualReport {
  double mass1 = 0.0, mass2 = 0.0;
  double momentum1 = 0.0, momentum2 = 0.0;
  double energy1 = 0.0, energy2 = 0.0;
  double eps = 0.0;
  std::size_t n_cells = 0;
  std::string kernel;

  std::array<double, 6> as_array() const {
    return {mass1, mass2, momentum1, momentum2, energy1, energy2};
  }
};

/// Evaluates the six weak residuals of a trajectory against psi. Space
/// integrals use the periodic trapezoidal rule (a plain h-weighted sum);
/// time integrals use the trapezoidal rule over the recorded snapshots.
/// Non-conservative terms (the smoothed pressure gradient and the recorded
/// dalpha1/dt) are evaluated exactly as the scheme defines them.
///
/// Throws InvalidArgumentError("snapshot cadence too coarse") when the
/// snapshot spacing exceeds 20x the smallest stable step of the run.
ResidualReport weak_residual(const Trajectory& traj, const TestFunction& psi);

/// One row of a refinement study: worst-case |residual| over the test-
/// function set, per equation, for one eps.
struct ConvergenceRow {
  double eps = 0.0;
  std::size_t n_cells = 0;
  double mass1 = 0.0, mass2 = 0.0;
  double momentum1 = 0.0, momentum2 = 0.0;
  double energy1 = 0.0, energy2 = 0.0;
  bool failed = false;
  std::string error;

  std::array<double, 6> as_array() const {
    return {mass1, mass2, momentum1, momentum2, energy1, energy2};
  }
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;

  /// residual(eps_{k+1}) / residual(eps_k) per equation, for consecutive
  /// non-failed rows.
  std::vector<std::array<double, 6>> decay_ratios() const;
};

/// Runs `run_at_eps` for every entry of eps_list and tabulates the
/// max-over-psi residual magnitudes. A failing eps is recorded in its row
/// and does not abort the remaining entries.
ConvergenceTable convergence_study(
    const std::function<Trajectory(double)>& run_at_eps,
    const std::vector<double>& eps_list,
    const std::vector<TestFunction>& psi_set);

}  // namespace sixeq

#endif  // SIXEQ_RESIDUAL_HPP
