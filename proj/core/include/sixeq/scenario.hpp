#ifndef SIXEQ_SCENARIO_HPP
#define SIXEQ_SCENARIO_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "sixeq/closure.hpp"
#include "sixeq/eos.hpp"
#include "sixeq/grid.hpp"
#include "sixeq/params.hpp"

namespace sixeq {

/// One side of a Riemann problem in primitive variables. The specific total
/// energies follow from the pressure law:
///   e_i = (p + k_i pinf_i) / ((k_i - 1) rho_i) + v_i^2 / 2.
struct PrimitiveSide {
  double p = 0.0;
  double alpha1 = 0.0;
  double rho1 = 0.0, rho2 = 0.0;
  double v1 = 0.0, v2 = 0.0;

  void validate(const FluidEos& eos) const;
};

/// Conserved cell values built exactly from primitives:
/// r_i = rho_i alpha_i, q_i = r_i v_i, en_i = r_i e_i.
CellConserved primitive_to_conserved(const PrimitiveSide& side,
                                     const FluidEos& eos);

/// Periodic embedding of Riemann data: the left state fills [1/4, 3/4) and
/// the right state the rest, so the profile has two transition layers and
/// waves from one do not immediately meet the other. Each jump is smoothed
/// over `smoothing_cells` cells with the kernel shape given.
/// Throws if either side fails its own closure re-check.
MixtureState riemann_on_torus(const PrimitiveSide& left,
                              const PrimitiveSide& right, const Grid& grid,
                              const FluidEos& eos,
                              std::size_t smoothing_cells,
                              KernelShape shape = KernelShape::bump);

/// A named initial-data preset loaded from a data file: two primitive sides
/// plus the fluid constants, with the file recording where every number was
/// transcribed from.
struct Preset {
  std::string name;
  PrimitiveSide left, right;
  FluidEos eos;
  std::string source_file;
};

/// Directories searched for "<name>.preset" files, in order.
std::vector<std::string> preset_search_dirs();

std::vector<std::string> list_presets();

/// Loads a preset by name. Unknown names raise ConfigError listing the
/// available presets.
Preset preset(const std::string& name);

/// Loads a preset from an explicit file path.
Preset load_preset_file(const std::string& path, const std::string& name);

}  // namespace sixeq

#endif  // SIXEQ_SCENARIO_HPP
