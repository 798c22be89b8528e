#ifndef SIXEQ_RHS_HPP
#define SIXEQ_RHS_HPP

#include "sixeq/closure.hpp"
#include "sixeq/kernel.hpp"
#include "sixeq/state.hpp"

namespace sixeq {

/// Time derivatives of the six evolved fields, plus the volume-fraction rate
/// dalpha1/dt that was used to decouple the energy tendencies (diagnostic).
struct StateTendency {
  Field dr1, dr2;
  Field dq1, dq2;
  Field den1, den2;
  Field dalpha1;
};

/// Evaluates the semi-discrete right-hand side:
///
///   dr_i/dt  = -[r_i, v_i]_x + kappa1
///   dq_i/dt  = -[q_i, v_i]_x - alpha_i * d/dx(smoothed p)
///   den_i/dt = b_i - (+/-) p * dalpha1/dt
///
/// where b_i collects the transport, pressure-work and kappa2 terms of the
/// energy balance and dalpha1/dt is either eliminated exactly through the
/// closure sensitivities or supplied as a lagged estimate
/// (params.alpha_coupling). `kernel` must be built for (eps, lambda) on the
/// state's grid; pass `lagged_dalpha1` only in lagged mode (null means a
/// zero initial estimate).
///
/// Throws ClosureError on per-cell closure failure and IntegrationError
/// ("singular coupling") if |1 + p (F1 - F2)| < 1e-12.
StateTendency rhs(const MixtureState& state, const FluidEos& eos,
                  const SchemeParams& params, const MollifierKernel& kernel,
                  const Field* lagged_dalpha1 = nullptr);

}  // namespace sixeq

#endif  // SIXEQ_RHS_HPP
