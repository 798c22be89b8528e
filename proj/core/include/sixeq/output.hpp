#ifndef SIXEQ_OUTPUT_HPP
#define SIXEQ_OUTPUT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "sixeq/audit.hpp"
#include "sixeq/integrate.hpp"
#include "sixeq/residual.hpp"

namespace sixeq {

/// Formats a double with 17 significant digits ("%.17g"), the fixed
/// formatting every CSV writer uses.
std::string format_double(double x);

/// Writes the snapshot nearest to `time` as CSV with columns
/// x,r1,r2,v1,v2,p,alpha1,rho1,rho2,e1,e2 (closure-derived columns
/// recomputed from the stored state). The snapshot's actual time is recorded
/// in a "# time = ..." header line. Requested times outside the trajectory
/// range are errors.
void write_snapshot_csv(const Trajectory& traj, double time,
                        const std::string& path);

/// Conserved-variable snapshot read back from a CSV written by
/// write_snapshot_csv (q_i = r_i v_i, en_i = r_i e_i).
struct SnapshotData {
  double time = 0.0;
  MixtureState state;
};
SnapshotData read_snapshot_csv(const std::string& path);

void write_audit_csv(const ConservationAudit& audit, const std::string& path);

/// Residual table CSV with the fixed column set
/// eps,n_cells,res_mass1,res_mass2,res_mom1,res_mom2,res_en1,res_en2.
void write_residual_csv(const ConvergenceTable& table, const std::string& path);

std::string snapshot_filename(std::size_t index);

}  // namespace sixeq

#endif  // SIXEQ_OUTPUT_HPP
