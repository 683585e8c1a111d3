#include "hardy/gaussian.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hardy {

namespace {

constexpr cplx kI{0.0, 1.0};

void require_normalizable(const ComplexGaussian& g, const char* op) {
  if (g.formal())
    throw std::domain_error(std::string(op) + ": formal Gaussian (Re quad <= 0)");
}

cplx lin_dot_lin(const ComplexGaussian& g) {
  cplx s = 0;
  for (int d = 0; d < g.dim; ++d) s += g.lin[d] * g.lin[d];
  return s;
}

} // namespace

ComplexGaussian make_gaussian(int dim, cplx amplitude, cplx quad) {
  return make_gaussian(dim, amplitude, quad, Eigen::Vector2cd::Zero());
}

ComplexGaussian make_gaussian(int dim, cplx amplitude, cplx quad, const Eigen::Vector2cd& lin) {
  if (dim < 1 || dim > 2) throw std::invalid_argument("make_gaussian: dim must be 1 or 2");
  ComplexGaussian g;
  g.dim = dim;
  g.amplitude = amplitude;
  g.quad = quad;
  g.lin = lin;
  if (dim == 1) g.lin[1] = 0;
  return g;
}

cplx gauss_value(const ComplexGaussian& g, double x) {
  return g.amplitude * std::exp(-g.quad * (x * x) + g.lin[0] * x);
}

cplx gauss_value(const ComplexGaussian& g, double x0, double x1) {
  return g.amplitude * std::exp(-g.quad * (x0 * x0 + x1 * x1) + g.lin[0] * x0 + g.lin[1] * x1);
}

SampledField gauss_eval(const ComplexGaussian& g, const Grid& grid) {
  if (grid.dim != g.dim) throw std::invalid_argument("gauss_eval: dimension mismatch");
  if (g.dim == 1)
    return sample_function(grid, [&g](double x) { return gauss_value(g, x); });
  return sample_function(grid, [&g](double x, double y) { return gauss_value(g, x, y); });
}

ComplexGaussian gauss_product(const ComplexGaussian& g1, const ComplexGaussian& g2) {
  if (g1.dim != g2.dim) throw std::invalid_argument("gauss_product: dimension mismatch");
  return make_gaussian(g1.dim, g1.amplitude * g2.amplitude, g1.quad + g2.quad,
                       Eigen::Vector2cd(g1.lin + g2.lin));
}

ComplexGaussian gauss_ratio(const ComplexGaussian& g1, const ComplexGaussian& g2) {
  if (g1.dim != g2.dim) throw std::invalid_argument("gauss_ratio: dimension mismatch");
  if (g2.amplitude == cplx(0))
    throw std::domain_error("gauss_ratio: zero denominator amplitude");
  return make_gaussian(g1.dim, g1.amplitude / g2.amplitude, g1.quad - g2.quad,
                       Eigen::Vector2cd(g1.lin - g2.lin));
}

ComplexGaussian gauss_conj(const ComplexGaussian& g) {
  return make_gaussian(g.dim, std::conj(g.amplitude), std::conj(g.quad),
                       Eigen::Vector2cd(g.lin.conjugate()));
}

ComplexGaussian gauss_dilate(const ComplexGaussian& g, double s) {
  return make_gaussian(g.dim, g.amplitude, g.quad * (s * s), Eigen::Vector2cd(g.lin * s));
}

ComplexGaussian gauss_fourier(const ComplexGaussian& g) {
  require_normalizable(g, "gauss_fourier");
  const cplx a = g.quad;
  const cplx c = g.amplitude * std::pow(2.0 * a, -0.5 * g.dim) * std::exp(lin_dot_lin(g) / (4.0 * a));
  Eigen::Vector2cd b = Eigen::Vector2cd::Zero();
  for (int d = 0; d < g.dim; ++d) b[d] = -kI * g.lin[d] / (2.0 * a);
  return make_gaussian(g.dim, c, 1.0 / (4.0 * a), b);
}

ComplexGaussian gauss_inverse_fourier(const ComplexGaussian& g) {
  require_normalizable(g, "gauss_inverse_fourier");
  const cplx a = g.quad;
  const cplx c = g.amplitude * std::pow(2.0 * a, -0.5 * g.dim) * std::exp(lin_dot_lin(g) / (4.0 * a));
  Eigen::Vector2cd b = Eigen::Vector2cd::Zero();
  for (int d = 0; d < g.dim; ++d) b[d] = kI * g.lin[d] / (2.0 * a);
  return make_gaussian(g.dim, c, 1.0 / (4.0 * a), b);
}

double gauss_l2norm(const ComplexGaussian& g) {
  require_normalizable(g, "gauss_l2norm");
  const double ar = g.quad.real();
  double log_sq = 2.0 * std::log(std::abs(g.amplitude)) + g.dim * 0.5 * std::log(M_PI / (2.0 * ar));
  for (int d = 0; d < g.dim; ++d) {
    const double br = g.lin[d].real();
    log_sq += br * br / (2.0 * ar);
  }
  return std::exp(0.5 * log_sq);
}

ComplexGaussian gauss_evolve(const ComplexGaussian& g, double t) {
  require_normalizable(g, "gauss_evolve");
  const cplx D = 1.0 + 4.0 * kI * g.quad * t;
  const cplx c = g.amplitude * std::pow(D, -0.5 * g.dim) * std::exp(kI * t * lin_dot_lin(g) / D);
  return make_gaussian(g.dim, c, g.quad / D, Eigen::Vector2cd(g.lin / D));
}

ComplexGaussian gaussian_free_wave_oracle(double t, int dim) {
  const cplx c = std::pow(cplx(t, -1.0), -0.5 * dim);
  const cplx a = cplx(1.0, -t) / (4.0 * (t * t + 1.0));
  return make_gaussian(dim, c, a);
}

SampledField gaussian_free_wave(double t, const Grid& grid) {
  return gauss_eval(gaussian_free_wave_oracle(t, grid.dim), grid);
}

} // namespace hardy
