#ifndef SIXEQ_PARAMS_HPP
#define SIXEQ_PARAMS_HPP

#include <cmath>
#include <cstddef>
#include <string>

#include "sixeq/errors.hpp"
#include "sixeq/grid.hpp"

namespace sixeq {

/// Shape of the smoothing kernel. `bump` is the compactly supported
/// exp(-1/(1-x^2)) profile; `cosine` is the raised cosine (1+cos(pi x))/2.
/// Both are even, positive on (-1,1) and normalized to unit integral.
enum class KernelShape { bump, cosine };

/// How the volume-fraction time derivative entering the energy tendency is
/// obtained: `exact` eliminates it per cell through the closure
/// sensitivities; `lagged` reuses a finite-difference estimate from the
/// previous accepted step.
enum class AlphaCoupling { exact, lagged };

KernelShape parse_kernel_shape(const std::string& name);
std::string to_string(KernelShape shape);
AlphaCoupling parse_alpha_coupling(const std::string& name);
std::string to_string(AlphaCoupling mode);

/// Discretization parameters. `eps` is the transport stencil width and must
/// be an exact integer multiple of the grid spacing; `lambda` in (0,1) sets
/// the smoothing width eps^lambda; `kappa1`, `kappa2` are the constant
/// source magnitudes of the mass and energy tendencies.
struct SchemeParams {
  double eps = 0.0;
  double lambda = 0.5;
  double kappa1 = 0.0;
  double kappa2 = 0.0;
  double cfl = 0.5;
  double r_min = 1e-8;
  KernelShape kernel = KernelShape::bump;
  AlphaCoupling alpha_coupling = AlphaCoupling::exact;

  /// Stencil offset eps/h in cells; validate(grid) must have accepted.
  std::size_t stencil_cells(const Grid& grid) const {
    return static_cast<std::size_t>(std::llround(eps / grid.h));
  }

  /// Smoothing width eps^lambda.
  double mollifier_width() const { return std::pow(eps, lambda); }

  void validate(const Grid& grid) const;
};

/// Default source magnitude for a given stencil width.
inline double default_kappa(double eps) { return eps * eps; }

}  // namespace sixeq

#endif  // SIXEQ_PARAMS_HPP
