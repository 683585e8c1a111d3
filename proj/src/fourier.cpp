#include "hardy/fourier.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <stdexcept>

namespace hardy {

namespace {

constexpr cplx kI{0.0, 1.0};

Eigen::FFT<double>& fft_engine() {
  thread_local Eigen::FFT<double> fft; // plans cached per size, per thread
  return fft;
}

// One axis of the offset-aware transform. With x_j = x0 + j dx,
// xi_k = xi0 + k dxi and dx dxi = 2pi/N,
//   sum_j e^{-i xi_k x_j} f_j
//     = e^{-i xi0 x0} e^{-i k x0 dxi} DFT_k[ e^{-i j xi0 dx} f_j ].
// For the cell-centered grid xi0 dx = -pi and x0 dxi = -pi + pi/N exactly,
// so the phases reduce to parities and e^{-i pi k/N}, and
// e^{-i xi0 x0} = i (-1)^{N/2}.
void axis_forward(Eigen::VectorXcd& line, int n) {
  for (int j = 1; j < n; j += 2) line[j] = -line[j];
  Eigen::VectorXcd out(n);
  fft_engine().fwd(out, line);
  const double pin = M_PI / n;
  for (int k = 0; k < n; ++k) {
    cplx ph = std::polar(1.0, -pin * k);
    if (k % 2 != 0) ph = -ph;
    out[k] *= ph;
  }
  const cplx c = (n / 2) % 2 == 0 ? kI : -kI; // i (-1)^{N/2}
  line = out * c;
}

void axis_inverse(Eigen::VectorXcd& line, int n) {
  const double pin = M_PI / n;
  for (int k = 0; k < n; ++k) {
    cplx ph = std::polar(1.0, pin * k);
    if (k % 2 != 0) ph = -ph;
    line[k] *= ph;
  }
  Eigen::VectorXcd out(n);
  fft_engine().inv(out, line);
  for (int j = 1; j < n; j += 2) out[j] = -out[j];
  const cplx c = (n / 2) % 2 == 0 ? -kI : kI; // conj(i (-1)^{N/2})
  line = out * (c * double(n));               // Eigen inv scales by 1/N
}

template <typename AxisOp>
void apply_along_axes(Eigen::ArrayXcd& v, const Grid& g, AxisOp op) {
  const int n = g.n;
  if (g.dim == 1) {
    Eigen::VectorXcd line = v.matrix();
    op(line, n);
    v = line.array();
    return;
  }
  Eigen::VectorXcd line(n);
  // inner axis: contiguous rows of length n
  for (int j0 = 0; j0 < n; ++j0) {
    line = v.segment(long(j0) * n, n).matrix();
    op(line, n);
    v.segment(long(j0) * n, n) = line.array();
  }
  // outer axis: stride n
  for (int j1 = 0; j1 < n; ++j1) {
    for (int j0 = 0; j0 < n; ++j0) line[j0] = v[g.index(j0, j1)];
    op(line, n);
    for (int j0 = 0; j0 < n; ++j0) v[g.index(j0, j1)] = line[j0];
  }
}

} // namespace

SpectralField forward_fourier(const SampledField& f) {
  const Grid& g = f.grid;
  Eigen::ArrayXcd v = f.values;
  apply_along_axes(v, g, [](Eigen::VectorXcd& line, int n) { axis_forward(line, n); });
  v *= std::pow(g.dx / std::sqrt(2.0 * M_PI), g.dim);
  return make_spectral_field(g, std::move(v), !f.boundary_admissible);
}

SampledField inverse_fourier(const SpectralField& F) {
  const Grid& g = F.grid;
  Eigen::ArrayXcd v = F.values;
  apply_along_axes(v, g, [](Eigen::VectorXcd& line, int n) { axis_inverse(line, n); });
  v *= std::pow(g.dxi / std::sqrt(2.0 * M_PI), g.dim);
  return make_sampled_field(g, std::move(v));
}

cplx spectrum_at(const SampledField& f, double xi) {
  if (f.grid.dim != 1) throw std::invalid_argument("spectrum_at: 1D field expected");
  const Grid& g = f.grid;
  cplx s = 0;
  for (int j = 0; j < g.n; ++j) s += f.values[j] * std::polar(1.0, -xi * g.x(j));
  return s * (g.dx / std::sqrt(2.0 * M_PI));
}

cplx spectrum_at(const SampledField& f, double xi0, double xi1) {
  if (f.grid.dim != 2) throw std::invalid_argument("spectrum_at: 2D field expected");
  const Grid& g = f.grid;
  cplx s = 0;
  for (int j0 = 0; j0 < g.n; ++j0) {
    const double x0 = g.x(j0);
    cplx row = 0;
    for (int j1 = 0; j1 < g.n; ++j1)
      row += f.values[g.index(j0, j1)] * std::polar(1.0, -xi1 * g.x(j1));
    s += row * std::polar(1.0, -xi0 * x0);
  }
  return s * std::pow(g.dx / std::sqrt(2.0 * M_PI), 2);
}

cplx value_at(const SpectralField& F, double x) {
  if (F.grid.dim != 1) throw std::invalid_argument("value_at: 1D spectrum expected");
  const Grid& g = F.grid;
  cplx s = 0;
  for (int k = 0; k < g.n; ++k) s += F.values[k] * std::polar(1.0, x * g.xi(k));
  return s * (g.dxi / std::sqrt(2.0 * M_PI));
}

cplx value_at(const SpectralField& F, double x0, double x1) {
  if (F.grid.dim != 2) throw std::invalid_argument("value_at: 2D spectrum expected");
  const Grid& g = F.grid;
  cplx s = 0;
  for (int k0 = 0; k0 < g.n; ++k0) {
    cplx row = 0;
    for (int k1 = 0; k1 < g.n; ++k1)
      row += F.values[g.index(k0, k1)] * std::polar(1.0, x1 * g.xi(k1));
    s += row * std::polar(1.0, x0 * g.xi(k0));
  }
  return s * std::pow(g.dxi / std::sqrt(2.0 * M_PI), 2);
}

SpectralField spectral_derivative(const SpectralField& F, int axis) {
  const Grid& g = F.grid;
  if (axis < 0 || axis >= g.dim) throw std::invalid_argument("spectral_derivative: bad axis");
  // d/dxi maps to multiplication by -i x on the spatial side.
  SampledField side = inverse_fourier(F);
  if (g.dim == 1) {
    for (int j = 0; j < g.n; ++j) side.values[j] *= -kI * g.x(j);
  } else {
    for (int j0 = 0; j0 < g.n; ++j0)
      for (int j1 = 0; j1 < g.n; ++j1)
        side.values[g.index(j0, j1)] *= -kI * g.x(axis == 0 ? j0 : j1);
  }
  SpectralField out = forward_fourier(side);
  out.aliasing_warning = F.aliasing_warning;
  return out;
}

SampledField laplacian(const SampledField& f) {
  const Grid& g = f.grid;
  SpectralField F = forward_fourier(f);
  if (g.dim == 1) {
    for (int k = 0; k < g.n; ++k) F.values[k] *= -g.xi(k) * g.xi(k);
  } else {
    for (int k0 = 0; k0 < g.n; ++k0)
      for (int k1 = 0; k1 < g.n; ++k1)
        F.values[g.index(k0, k1)] *= -(g.xi(k0) * g.xi(k0) + g.xi(k1) * g.xi(k1));
  }
  return inverse_fourier(F);
}

} // namespace hardy
