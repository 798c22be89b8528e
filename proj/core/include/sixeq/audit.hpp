#ifndef SIXEQ_AUDIT_HPP
#define SIXEQ_AUDIT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "sixeq/integrate.hpp"

namespace sixeq {

/// Conservation bookkeeping of one trajectory. "source-corrected" means the
/// linear-in-time kappa1 contribution is subtracted before measuring drift.
/// Relative drifts are measured against the initial mean partial densities
/// and against the natural momentum/energy scales of the run
/// (total mass times peak wave speed, total initial energy).
struct ConservationAudit {
  std::vector<double> times;
  std::vector<double> mean_r1, mean_r2;          // raw means
  std::vector<double> corrected_r1, corrected_r2;  // mean - kappa1*t
  std::vector<double> momentum;                  // h * sum(q1 + q2)
  std::vector<double> energy;                    // h * sum(en1 + en2)

  double max_rel_drift_r1 = 0.0;
  double max_rel_drift_r2 = 0.0;
  double max_rel_drift_momentum = 0.0;  // against mass * peak wave speed
  double max_rel_drift_energy = 0.0;
  double momentum_scale = 0.0;

  bool mass_ok = false;      // corrected means constant to 1e-10 relative
  bool momentum_ok = false;  // drift <= 1e-11 relative per unit time
  bool positivity_ok = false;  // r_i >= r_min at every snapshot

  std::vector<std::string> flags;  // human-readable breach descriptions
};

inline constexpr double kAuditMassTol = 1e-10;
inline constexpr double kAuditMassTolSourceFree = 1e-12;
inline constexpr double kAuditMomentumRateTol = 1e-11;

ConservationAudit conservation_audit(const Trajectory& traj);

}  // namespace sixeq

#endif  // SIXEQ_AUDIT_HPP
