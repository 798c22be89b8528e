#ifndef SIXEQ_INTEGRATE_HPP
#define SIXEQ_INTEGRATE_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "sixeq/errors.hpp"
#include "sixeq/kernel.hpp"
#include "sixeq/rhs.hpp"
#include "sixeq/state.hpp"

namespace sixeq {

/// result = state + coef * tendency (the six evolved fields only).
MixtureState state_add_scaled(const MixtureState& state,
                              const StateTendency& tendency, double coef);

/// Largest stable explicit step: cfl * eps / max_j,i(|v_i| + c_i) with the
/// per-fluid sound speed c_i = sqrt(k_i (p + pinf_i) / rho_i). Falls back to
/// kZeroSpeedDtFactor * cfl * eps when every wave speed vanishes.
inline constexpr double kZeroSpeedDtFactor = 1e12;
double stable_dt(const MixtureState& state, const FluidEos& eos,
                 const SchemeParams& params);

/// One classical 4-stage explicit step of an arbitrary tendency function.
/// A throwing stage is reported with its stage index attached.
template <typename Rhs>
MixtureState step_rk4_with(const MixtureState& state, double dt, Rhs&& f) {
  auto stage = [&](const MixtureState& u, std::size_t index) -> StateTendency {
    try {
      return f(u);
    } catch (const SolverError& e) {
      throw IntegrationError(std::string("stage ") + std::to_string(index) +
                                 ": " + e.what(),
                             index);
    }
  };
  const StateTendency k1 = stage(state, 0);
  const StateTendency k2 = stage(state_add_scaled(state, k1, 0.5 * dt), 1);
  const StateTendency k3 = stage(state_add_scaled(state, k2, 0.5 * dt), 2);
  const StateTendency k4 = stage(state_add_scaled(state, k3, dt), 3);

  MixtureState out = state;
  const double w = dt / 6.0;
  const std::size_t n = state.size();
  auto combine = [&](Field& dst, const Field& a, const Field& b,
                     const Field& c, const Field& d) {
    for (std::size_t j = 0; j < n; ++j)
      dst[j] += w * (a[j] + 2.0 * b[j] + 2.0 * c[j] + d[j]);
  };
  combine(out.r1, k1.dr1, k2.dr1, k3.dr1, k4.dr1);
  combine(out.r2, k1.dr2, k2.dr2, k3.dr2, k4.dr2);
  combine(out.q1, k1.dq1, k2.dq1, k3.dq1, k4.dq1);
  combine(out.q2, k1.dq2, k2.dq2, k3.dq2, k4.dq2);
  combine(out.en1, k1.den1, k2.den1, k3.den1, k4.den1);
  combine(out.en2, k1.den2, k2.den2, k3.den2, k4.den2);
  return out;
}

/// step_rk4_with bound to the model tendency.
MixtureState step_rk4(const MixtureState& state, double dt,
                      const FluidEos& eos, const SchemeParams& params,
                      const MollifierKernel& kernel,
                      const Field* lagged_dalpha1 = nullptr);

/// Time-stamped run history. `dalpha1` holds the recorded volume-fraction
/// rate at each snapshot; `min_stable_dt` is the smallest stability bound
/// seen while stepping (snapshot-cadence checks compare against it).
struct Trajectory {
  std::vector<double> times;
  std::vector<MixtureState> states;
  std::vector<Field> dalpha1;
  Grid grid;
  FluidEos eos;
  SchemeParams params;
  double min_stable_dt = 0.0;
  std::size_t steps_taken = 0;
};

/// Advances `initial` to t_end, recomputing the stable step each iteration
/// and shortening steps to land exactly on snapshot times (multiples of
/// snapshot_every) and on t_end. t_end == 0 yields the single t = 0
/// snapshot. Any step failure aborts with the last good snapshot recorded
/// in the attached diagnostics.
Trajectory run(const MixtureState& initial, double t_end, const FluidEos& eos,
               const SchemeParams& params, double snapshot_every);

}  // namespace sixeq

#endif  // SIXEQ_INTEGRATE_HPP
