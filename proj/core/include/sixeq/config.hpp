#ifndef SIXEQ_CONFIG_HPP
#define SIXEQ_CONFIG_HPP

#include <map>
#include <optional>
#include <string>

#include "sixeq/eos.hpp"
#include "sixeq/params.hpp"
#include "sixeq/scenario.hpp"

namespace sixeq {

/// Fully resolved run configuration. `scenario` is either a preset name or
/// "custom", in which case the two sides and the fluid constants come from
/// the config file itself.
struct RunConfig {
  std::string scenario = "toumi";
  FluidEos eos;
  SchemeParams params;
  std::size_t n_cells = 400;
  double t_end = 0.0;
  double snapshot_every = 0.0;
  std::size_t smoothing_cells = 4;
  std::string output_dir = "out";

  // Populated for scenario == "custom"; otherwise taken from the preset.
  std::optional<PrimitiveSide> left, right;

  Grid grid() const { return make_grid(n_cells, 1.0); }

  /// Initial data and fluid constants this config resolves to.
  struct Resolved {
    PrimitiveSide left, right;
    FluidEos eos;
  };
  Resolved resolve_scenario() const;

  void validate() const;
};

/// Parses the flat key = value format. Unknown keys are errors in strict
/// mode. Syntax errors carry the 1-based line number, validation errors the
/// offending key.
RunConfig parse_config(const std::string& text, bool strict = true);

/// parse_config over the contents of `path`. Missing or unreadable files
/// raise IoError.
RunConfig load_config(const std::string& path, bool strict = true);

/// Serializes a config back to the key = value format (used for the
/// run-metadata echo; load_config(serialize_config(c)) round-trips).
std::string serialize_config(const RunConfig& config);

}  // namespace sixeq

#endif  // SIXEQ_CONFIG_HPP
