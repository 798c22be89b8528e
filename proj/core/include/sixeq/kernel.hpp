#ifndef SIXEQ_KERNEL_HPP
#define SIXEQ_KERNEL_HPP

#include <cstddef>
#include <vector>

#include "sixeq/grid.hpp"
#include "sixeq/params.hpp"

namespace sixeq {

/// Discrete smoothing kernel: point samples of a scaled even bump and of its
/// derivative on the grid. weights[half_width_cells + d] holds the weight at
/// offset d in [-half_width_cells, half_width_cells]. Weights are symmetric,
/// non-negative and sum to 1 exactly; dweights are antisymmetric with a zero
/// center entry, so their sum is exactly 0.
struct MollifierKernel {
  std::size_t half_width_cells = 0;
  std::vector<double> weights;
  std::vector<double> dweights;

  double weight(long long d) const {
    return weights[static_cast<std::size_t>(
        d + static_cast<long long>(half_width_cells))];
  }
  double dweight(long long d) const {
    return dweights[static_cast<std::size_t>(
        d + static_cast<long long>(half_width_cells))];
  }
};

/// Builds the kernel of width eps^lambda on `grid`. Throws KernelError when
/// the support covers fewer than 2 cells per side ("kernel under-resolved").
MollifierKernel make_kernel(double eps, double lambda, const Grid& grid,
                            KernelShape shape = KernelShape::bump);

/// Kernel with an explicitly chosen support radius in cells, used for
/// smoothing initial data over a few cells. half_width_cells >= 1.
MollifierKernel make_smoothing_kernel(std::size_t half_width_cells,
                                      KernelShape shape = KernelShape::bump);

/// Periodic discrete convolution with the kernel weights. Exact for
/// constants and preserves the discrete mean.
Field mollify(const Field& f, const MollifierKernel& kernel);

/// Periodic convolution with the differentiated kernel: the spatial
/// derivative of the smoothed field. Exactly zero on constants and has
/// exactly zero discrete sum.
Field mollified_gradient(const Field& f, const MollifierKernel& kernel);

}  // namespace sixeq

#endif  // SIXEQ_KERNEL_HPP
