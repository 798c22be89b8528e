#ifndef SIXEQ_GRID_HPP
#define SIXEQ_GRID_HPP

#include <cstddef>
#include <vector>

namespace sixeq {

/// Uniform periodic grid on a circle of circumference `length`. Cell j holds
/// the point value at x = j*h; all index arithmetic wraps modulo n_cells.
struct Grid {
  std::size_t n_cells = 0;
  double length = 1.0;
  double h = 0.0;

  double x(std::size_t j) const { return static_cast<double>(j) * h; }

  /// Periodic index wrap for any (possibly negative) offset index.
  std::size_t wrap(long long j) const {
    const long long n = static_cast<long long>(n_cells);
    long long m = j % n;
    if (m < 0) m += n;
    return static_cast<std::size_t>(m);
  }

  bool operator==(const Grid&) const = default;
};

/// Point samples of a function on the grid, one value per cell.
using Field = std::vector<double>;

/// Builds a periodic grid. Rejects n_cells < 8 and non-positive length.
Grid make_grid(std::size_t n_cells, double length = 1.0);

/// Cyclic shift: result[j] = field[(j + offset) mod n].
Field shift(const Field& field, long long offset);

double field_sum(const Field& f);
double field_mean(const Field& f);
double field_max_abs(const Field& f);
bool field_all_finite(const Field& f);

}  // namespace sixeq

#endif  // SIXEQ_GRID_HPP
