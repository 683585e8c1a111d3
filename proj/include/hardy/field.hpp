#pragma once

#include <Eigen/Core>
#include <complex>
#include <type_traits>

#include "hardy/grid.hpp"

namespace hardy {

using cplx = std::complex<double>;

// Relative floor under which a tail is considered resolved on the grid.
inline constexpr double kBoundaryFloor = 1e-12;

// Complex samples on a Grid, lexicographic in grid index.
// boundary_admissible records at construction whether the outermost cells
// are below kBoundaryFloor relative to the peak magnitude.
struct SampledField {
  Grid grid;
  Eigen::ArrayXcd values;
  bool boundary_admissible = false;
};

// Coefficients on the dual frequency grid of `grid`, unitary normalization.
// aliasing_warning is set when the source field had unresolved tails.
struct SpectralField {
  Grid grid;
  Eigen::ArrayXcd values;
  bool aliasing_warning = false;
};

SampledField make_sampled_field(const Grid& g, Eigen::ArrayXcd values);
SpectralField make_spectral_field(const Grid& g, Eigen::ArrayXcd values,
                                  bool aliasing_warning = false);

// max |boundary cell| / max |cell|; 0 for the zero field.
double boundary_ratio(const Grid& g, const Eigen::ArrayXcd& values);

// Like boundary_ratio, but over the cells where the resolved region ends:
// box boundary cells plus nonzero cells adjacent to a zero cell. For fields
// whose far tail was floored or underflowed, this measures how far the
// values have decayed before the data stop being representable.
double resolution_edge_ratio(const Grid& g, const Eigen::ArrayXcd& values);

// Zeroes cells below rel_floor * max|f|. Discrete transforms leave roundoff
// of order 1e-15 relative in the far tail; Gaussian-weighted quadratures
// amplify such cells beyond any signal, so they are numerically silent and
// must be dropped before weighting.
SampledField floor_noise(const SampledField& f, double rel_floor = 1e-14);

// Quadrature L2 norms: sum |v|^2 dx^dim resp. sum |v|^2 dxi^dim.
double l2_norm(const SampledField& f);
double l2_norm(const SpectralField& f);

// Complex inner products <f, g> = sum f conj(g) * cell volume.
cplx inner(const SampledField& f, const SampledField& g);
cplx inner(const SpectralField& f, const SpectralField& g);

// Pointwise sampling helpers; the callable arity selects the dimension.
template <typename Fn>
SampledField sample_function(const Grid& g, Fn&& fn) {
  Eigen::ArrayXcd v(g.total_points());
  if constexpr (std::is_invocable_v<Fn, double, double>) {
    if (g.dim != 2) throw std::invalid_argument("sample_function: 2D callable on a 1D grid");
    for (int j0 = 0; j0 < g.n; ++j0)
      for (int j1 = 0; j1 < g.n; ++j1) v[g.index(j0, j1)] = fn(g.x(j0), g.x(j1));
  } else {
    if (g.dim != 1) throw std::invalid_argument("sample_function: 1D callable on a 2D grid");
    for (int j = 0; j < g.n; ++j) v[j] = fn(g.x(j));
  }
  return make_sampled_field(g, std::move(v));
}

// Physicists' Hermite polynomial H_k.
double hermite(int k, double x);

// Hermite function H_k(x) e^{-x^2/2}; eigenfunction of the unitary Fourier
// transform with eigenvalue (-i)^k.
SampledField sample_hermite_gaussian(const Grid& g, int k);
SampledField sample_hermite_gaussian2(const Grid& g, int k0, int k1);

} // namespace hardy
