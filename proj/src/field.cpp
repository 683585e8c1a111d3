#include "hardy/field.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hardy {

namespace {

// Largest magnitude over the outermost cell layer.
double boundary_max(const Grid& g, const Eigen::ArrayXcd& v) {
  double m = 0;
  if (g.dim == 1) {
    m = std::max(std::abs(v[0]), std::abs(v[g.n - 1]));
  } else {
    const int n = g.n;
    for (int j = 0; j < n; ++j) {
      m = std::max(m, std::abs(v[g.index(0, j)]));
      m = std::max(m, std::abs(v[g.index(n - 1, j)]));
      m = std::max(m, std::abs(v[g.index(j, 0)]));
      m = std::max(m, std::abs(v[g.index(j, n - 1)]));
    }
  }
  return m;
}

} // namespace

double boundary_ratio(const Grid& g, const Eigen::ArrayXcd& values) {
  const double peak = values.abs().maxCoeff();
  if (peak == 0) return 0;
  return boundary_max(g, values) / peak;
}

double resolution_edge_ratio(const Grid& g, const Eigen::ArrayXcd& v) {
  const double peak = v.abs().maxCoeff();
  if (peak == 0) return 0;
  auto zero = [&](long i) { return v[i] == cplx(0); };
  double m = boundary_max(g, v);
  if (g.dim == 1) {
    for (int j = 1; j + 1 < g.n; ++j) {
      if (zero(j)) continue;
      if (zero(j - 1) || zero(j + 1)) m = std::max(m, std::abs(v[j]));
    }
  } else {
    const int n = g.n;
    for (int j0 = 1; j0 + 1 < n; ++j0)
      for (int j1 = 1; j1 + 1 < n; ++j1) {
        const long i = g.index(j0, j1);
        if (zero(i)) continue;
        if (zero(g.index(j0 - 1, j1)) || zero(g.index(j0 + 1, j1)) ||
            zero(g.index(j0, j1 - 1)) || zero(g.index(j0, j1 + 1)))
          m = std::max(m, std::abs(v[i]));
      }
  }
  return m / peak;
}

SampledField make_sampled_field(const Grid& g, Eigen::ArrayXcd values) {
  if (values.size() != g.total_points())
    throw std::invalid_argument("make_sampled_field: value count does not match grid");
  if (!values.isFinite().all())
    throw std::invalid_argument("make_sampled_field: non-finite field values");
  SampledField f;
  f.grid = g;
  f.values = std::move(values);
  f.boundary_admissible = boundary_ratio(g, f.values) <= kBoundaryFloor;
  return f;
}

SpectralField make_spectral_field(const Grid& g, Eigen::ArrayXcd values, bool aliasing_warning) {
  if (values.size() != g.total_points())
    throw std::invalid_argument("make_spectral_field: value count does not match grid");
  if (!values.isFinite().all())
    throw std::invalid_argument("make_spectral_field: non-finite coefficients");
  SpectralField f;
  f.grid = g;
  f.values = std::move(values);
  f.aliasing_warning = aliasing_warning;
  return f;
}

SampledField floor_noise(const SampledField& f, double rel_floor) {
  const double cut = rel_floor * f.values.abs().maxCoeff();
  Eigen::ArrayXcd v = f.values;
  for (long i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) < cut) v[i] = 0;
  return make_sampled_field(f.grid, std::move(v));
}

double l2_norm(const SampledField& f) {
  const double cell = std::pow(f.grid.dx, f.grid.dim);
  return std::sqrt(f.values.abs2().sum() * cell);
}

double l2_norm(const SpectralField& f) {
  const double cell = std::pow(f.grid.dxi, f.grid.dim);
  return std::sqrt(f.values.abs2().sum() * cell);
}

cplx inner(const SampledField& f, const SampledField& g) {
  if (!(f.grid == g.grid)) throw std::invalid_argument("inner: grid mismatch");
  const double cell = std::pow(f.grid.dx, f.grid.dim);
  return (f.values * g.values.conjugate()).sum() * cell;
}

cplx inner(const SpectralField& f, const SpectralField& g) {
  if (!(f.grid == g.grid)) throw std::invalid_argument("inner: grid mismatch");
  const double cell = std::pow(f.grid.dxi, f.grid.dim);
  return (f.values * g.values.conjugate()).sum() * cell;
}

double hermite(int k, double x) {
  if (k < 0) throw std::invalid_argument("hermite: negative degree");
  double h0 = 1.0, h1 = 2.0 * x;
  if (k == 0) return h0;
  if (k == 1) return h1;
  for (int m = 2; m <= k; ++m) {
    const double h2 = 2.0 * x * h1 - 2.0 * (m - 1) * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

SampledField sample_hermite_gaussian(const Grid& g, int k) {
  if (g.dim != 1) throw std::invalid_argument("sample_hermite_gaussian: 1D grid expected");
  return sample_function(g, [k](double x) { return cplx(hermite(k, x) * std::exp(-0.5 * x * x), 0.0); });
}

SampledField sample_hermite_gaussian2(const Grid& g, int k0, int k1) {
  if (g.dim != 2) throw std::invalid_argument("sample_hermite_gaussian2: 2D grid expected");
  return sample_function(g, [k0, k1](double x, double y) {
    return cplx(hermite(k0, x) * hermite(k1, y) * std::exp(-0.5 * (x * x + y * y)), 0.0);
  });
}

} // namespace hardy
