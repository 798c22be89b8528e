#ifndef SIXEQ_STATE_HPP
#define SIXEQ_STATE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "sixeq/grid.hpp"
#include "sixeq/params.hpp"

namespace sixeq {

/// The six evolved fields on one grid: partial densities r_i = rho_i*alpha_i,
/// partial momenta q_i = r_i*v_i and partial total energies en_i = r_i*e_i.
struct MixtureState {
  Grid grid;
  Field r1, r2;
  Field q1, q2;
  Field en1, en2;

  std::size_t size() const { return grid.n_cells; }
};

/// Allocates a state with all six fields zero-filled on `grid`.
MixtureState make_state(const Grid& grid);

/// One reported defect of a state: which field, which cell, what kind.
struct StateViolation {
  enum class Kind { below_floor, non_finite };
  Kind kind;
  std::string field;
  std::size_t cell;
  double value;

  std::string describe() const;
};

/// Reports every cell where a partial density sits below r_min or any field
/// is non-finite. Empty result means the state is admissible.
std::vector<StateViolation> validate_state(const MixtureState& state,
                                           const SchemeParams& params);

}  // namespace sixeq

#endif  // SIXEQ_STATE_HPP
