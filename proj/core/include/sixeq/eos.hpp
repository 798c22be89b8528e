#ifndef SIXEQ_EOS_HPP
#define SIXEQ_EOS_HPP

#include <cmath>

#include "sixeq/errors.hpp"

namespace sixeq {

/// Stiffened-gas constants for the two fluids: exponents k1, k2 > 1 and
/// reference pressures pinf1, pinf2 >= 0. Pressure law per fluid:
///   p = (k - 1) * rho * e_int - k * pinf.
struct FluidEos {
  double k1 = 1.4;
  double k2 = 1.4;
  double pinf1 = 0.0;
  double pinf2 = 0.0;

  double k(int fluid) const { return fluid == 1 ? k1 : k2; }
  double pinf(int fluid) const { return fluid == 1 ? pinf1 : pinf2; }

  /// Sound speed c = sqrt(k (p + pinf) / rho) of one fluid.
  double sound_speed(int fluid, double p, double rho) const {
    return std::sqrt(k(fluid) * (p + pinf(fluid)) / rho);
  }

  void validate() const {
    if (!(k1 > 1.0) || !(k2 > 1.0))
      throw InvalidArgumentError("eos: exponents k1, k2 must be > 1");
    if (!(pinf1 >= 0.0) || !(pinf2 >= 0.0))
      throw InvalidArgumentError("eos: reference pressures must be >= 0");
  }
};

}  // namespace sixeq

#endif  // SIXEQ_EOS_HPP
