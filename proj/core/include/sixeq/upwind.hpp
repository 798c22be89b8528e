#ifndef SIXEQ_UPWIND_HPP
#define SIXEQ_UPWIND_HPP

#include "sixeq/grid.hpp"

namespace sixeq {

/// Upwind transport operator on the periodic grid:
///
///   result(x) = -(1/eps) * ( V(x-eps) v+(x-eps) - V(x) |v|(x)
///                            + V(x+eps) v-(x+eps) ),
///
/// with v+ = max(v,0), v- = max(-v,0). eps must be an exact integer multiple
/// of the grid spacing; the stencil then lands on grid points and the
/// discrete sum of the result telescopes to zero.
Field upwind_bracket(const Field& V, const Field& v, double eps,
                     const Grid& grid);

}  // namespace sixeq

#endif  // SIXEQ_UPWIND_HPP
