#pragma once

#include <stdexcept>

namespace hardy {

// Uniform cell-centered grid on [-L, L) per axis.
//
// Sample points are x_j = -L + (j + 1/2) dx with dx = 2L/N, so 0 is never a
// sample point and pointwise division by x is always defined. The dual grid
// xi_k = (k - N/2) dxi with dxi = pi/L spans [-pi/dx, pi/dx).
struct Grid {
  int dim = 1;
  int n = 0;             // points per axis, even
  double half_width = 0; // L
  double dx = 0;
  double dxi = 0;

  long total_points() const { return dim == 1 ? n : long(n) * n; }

  double x(int j) const { return -half_width + (j + 0.5) * dx; }
  double xi(int k) const { return (k - n / 2) * dxi; }
  double xi_max() const { return (n / 2) * dxi; }

  // Lexicographic flattening for dim == 2 (first axis outer).
  long index(int j0, int j1) const { return long(j0) * n + j1; }

  bool operator==(const Grid& o) const {
    return dim == o.dim && n == o.n && half_width == o.half_width;
  }
};

Grid make_grid(int dim, int n, double half_width);

} // namespace hardy
