#include "hardy/grid.hpp"

#include <cmath>
#include <string>

namespace hardy {

Grid make_grid(int dim, int n, double half_width) {
  if (dim < 1 || dim > 2)
    throw std::invalid_argument("make_grid: dim must be 1 or 2, got " + std::to_string(dim));
  if (n < 8) throw std::invalid_argument("make_grid: N must be >= 8, got " + std::to_string(n));
  if (n % 2 != 0)
    throw std::invalid_argument("make_grid: N must be even (offset symmetry requires even N), got " +
                                std::to_string(n));
  if (!(half_width > 0)) throw std::invalid_argument("make_grid: L must be positive");
  Grid g;
  g.dim = dim;
  g.n = n;
  g.half_width = half_width;
  g.dx = 2.0 * half_width / n;
  g.dxi = M_PI / half_width;
  return g;
}

} // namespace hardy
