#include "hardy/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hardy/fourier.hpp"
#include "hardy/gaussian.hpp"

namespace hardy {

namespace {

constexpr cplx kI{0.0, 1.0};

void require_1d(const SampledField& f, const char* op) {
  if (f.grid.dim != 1) throw std::invalid_argument(std::string(op) + ": 1D field expected");
}

// Outward slope of the log weighted profile over the outer cells of each
// side; positive means the profile is still growing where the data end.
// The tolerance sits above the log-jitter of samples near the trust floor.
bool profile_growing_at_edge(const std::vector<double>& lw, int span = 8) {
  const int n = (int)lw.size();
  const double tol = 1e-3;
  const bool left = lw[0] - lw[span] > tol;
  const bool right = lw[n - 1] - lw[n - 1 - span] > tol;
  return left || right;
}

} // namespace

const char* to_string(HardyRegime r) {
  switch (r) {
    case HardyRegime::subcritical: return "subcritical";
    case HardyRegime::endpoint: return "endpoint";
    case HardyRegime::supercritical: return "supercritical";
  }
  return "?";
}

const char* to_string(HardyClass c) {
  switch (c) {
    case HardyClass::consistent_only_with_zero: return "consistent-only-with-zero";
    case HardyClass::consistent_with_gaussian_line: return "consistent-with-gaussian-line";
    case HardyClass::unconstrained: return "unconstrained";
  }
  return "?";
}

SampledField reduce_T(const SampledField& h) {
  require_1d(h, "reduce_T");
  const Grid& g = h.grid;
  const cplx h0 = value_at(forward_fourier(h), 0.0);
  Eigen::ArrayXcd out(g.n);
  for (int j = 0; j < g.n; ++j) {
    const double x = g.x(j);
    out[j] = (h.values[j] - h0 * std::exp(-0.25 * x * x)) / x;
  }
  return make_sampled_field(g, std::move(out));
}

SampledField iterate_T(const SampledField& h, int k) {
  if (k < 0) throw std::invalid_argument("iterate_T: negative iteration count");
  SampledField f = h;
  for (int i = 0; i < k; ++i) f = reduce_T(f);
  return f;
}

SpectralField sign_convolution(const SpectralField& ghat) {
  if (ghat.grid.dim != 1) throw std::invalid_argument("sign_convolution: 1D spectrum expected");
  const Grid& g = ghat.grid;
  const cplx mass = ghat.values.sum() * g.dxi;
  const double l1 = ghat.values.abs().sum() * g.dxi;
  if (std::abs(mass) > 1e-8 * l1)
    throw std::domain_error("sign_convolution: g(0) != 0; subtract the Gaussian first");
  // Exact antiderivative of the band-limited interpolant of ghat from the
  // left edge of the dual span (a cell-rule cumulative is only O(dxi^2) and
  // cannot reach the identity tolerances):
  //   int e^{-i eta x_j} d eta over [-ximax, xi] = (e^{-i xi x_j} - e^{i ximax x_j})/(-i x_j).
  const SampledField gsp = inverse_fourier(ghat);
  const double scale = g.dx / std::sqrt(2 * M_PI);
  const double ximax = g.xi_max();
  Eigen::ArrayXcd coeff(g.n), edge(g.n);
  for (int j = 0; j < g.n; ++j) {
    coeff[j] = gsp.values[j] / (-kI * g.x(j));
    edge[j] = std::polar(1.0, ximax * g.x(j));
  }
  Eigen::ArrayXcd out(g.n);
  for (int k = 0; k < g.n; ++k) {
    cplx acc = 0;
    for (int j = 0; j < g.n; ++j)
      acc += coeff[j] * (std::polar(1.0, -g.xi(k) * g.x(j)) - edge[j]);
    out[k] = 2.0 * scale * acc;
  }
  return make_spectral_field(g, std::move(out), ghat.aliasing_warning);
}

SampledField slice_transform(const SampledField& h, double eta) {
  if (h.grid.dim != 2) throw std::invalid_argument("slice_transform: 2D field expected");
  const Grid& g = h.grid;
  if (std::abs(eta) > g.xi_max())
    throw std::domain_error("slice_transform: eta outside the dual grid span");
  Grid line = make_grid(1, g.n, g.half_width);
  Eigen::ArrayXcd out(g.n);
  const double scale = g.dx / std::sqrt(2 * M_PI);
  for (int j0 = 0; j0 < g.n; ++j0) {
    cplx s = 0;
    for (int j1 = 0; j1 < g.n; ++j1)
      s += h.values[g.index(j0, j1)] * std::polar(1.0, -eta * g.x(j1));
    out[j0] = s * scale;
  }
  return make_sampled_field(line, std::move(out));
}

SampledField smooth_Psi(const SampledField& phi) {
  require_1d(phi, "smooth_Psi");
  const Grid& g = phi.grid;
  Eigen::ArrayXcd out(g.n);
  for (int j = 0; j < g.n; ++j) {
    const double x = g.x(j);
    cplx conv = 0;
    for (int m = 0; m < g.n; ++m) {
      const double d = x - g.x(m);
      conv += std::exp(-0.5 * d * d) * phi.values[m];
    }
    out[j] = std::exp(-0.25 * x * x) * conv * g.dx;
  }
  return make_sampled_field(g, std::move(out));
}

std::pair<double, double> psi_identity_residuals(const SampledField& phi) {
  require_1d(phi, "psi_identity_residuals");
  const Grid& g = phi.grid;
  const SampledField psi = smooth_Psi(phi);
  if (psi.values.abs().maxCoeff() == 0) return {0.0, 0.0};

  // The e^{x^2/2}- and e^{xi^2/2}-weighted comparisons amplify the roundoff
  // floor of Psi and Psihat by e^{w^2/2}; beyond |.| ~ 5.5 the amplified
  // noise passes 1e-8 of the profile scale, so the residuals are taken on
  // this central window.
  const double window = 5.5;

  // spatial side: e^{x^2/2} Psi(x) vs (e^{-|.|^2} * Y1)(x/2)
  double err1 = 0, scale1 = 0;
  for (int j = 0; j < g.n; ++j) {
    const double x = g.x(j);
    if (std::abs(x) > std::min(g.half_width / 2, window)) continue;
    const cplx lhs = std::exp(0.5 * x * x) * psi.values[j];
    cplx rhs = 0;
    for (int m = 0; m < g.n; ++m) {
      const double y = g.x(m);
      const double d = 0.5 * x - y;
      // e^{-(x/2-y)^2} e^{y^2/2} merged in the exponent to avoid overflow
      rhs += std::exp(-d * d + 0.5 * y * y) * phi.values[m];
    }
    rhs *= g.dx;
    err1 = std::max(err1, std::abs(lhs - rhs));
    scale1 = std::max(scale1, std::abs(lhs));
  }

  // transform side: e^{xi^2/2} Psihat(xi) vs sqrt(2) (e^{-2|.|^2} * Y2)(xi/2)
  const SpectralField phihat = forward_fourier(phi);
  const SpectralField psihat = forward_fourier(psi);
  double err2 = 0, scale2 = 0;
  for (int k = 0; k < g.n; ++k) {
    const double xi = g.xi(k);
    if (std::abs(xi) > std::min(g.xi_max() / 2, window)) continue;
    const cplx lhs = std::exp(0.5 * xi * xi) * psihat.values[k];
    cplx rhs = 0;
    for (int m = 0; m < g.n; ++m) {
      const double eta = g.xi(m);
      const double d = 0.5 * xi - eta;
      rhs += std::exp(-2.0 * d * d + 0.5 * eta * eta) * phihat.values[m];
    }
    rhs *= std::sqrt(2.0) * g.dxi;
    err2 = std::max(err2, std::abs(lhs - rhs));
    scale2 = std::max(scale2, std::abs(lhs));
  }
  return {scale1 > 0 ? err1 / scale1 : err1, scale2 > 0 ? err2 / scale2 : err2};
}

namespace {

WeightedSup weighted_sup_profile(const Eigen::ArrayXcd& values,
                                 const std::vector<double>& coord_sq, double weight,
                                 double floor_mag) {
  // log profile over trusted samples only
  std::vector<double> lw;
  std::vector<int> idx;
  for (int j = 0; j < (int)coord_sq.size(); ++j) {
    const double m = std::abs(values[j]);
    if (m < floor_mag) continue;
    lw.push_back(weight * coord_sq[j] + std::log(m));
    idx.push_back(j);
  }
  WeightedSup out;
  if (lw.size() < 20) { // nothing trustworthy to scan
    out.resolved = false;
    return out;
  }
  out.value = std::exp(*std::max_element(lw.begin(), lw.end()));
  out.resolved = !profile_growing_at_edge(lw);
  return out;
}

} // namespace

HardyVerdict hardy_certificate(const SampledField& h, double alpha, double beta) {
  require_1d(h, "hardy_certificate");
  const Grid& g = h.grid;
  HardyVerdict v;
  v.alpha = alpha;
  v.beta = beta;

  std::vector<double> xsq(g.n);
  for (int j = 0; j < g.n; ++j) xsq[j] = g.x(j) * g.x(j);
  const double floor_x = 1e-12 * h.values.abs().maxCoeff();
  v.sup_x = weighted_sup_profile(h.values, xsq, 1.0 / (beta * beta), floor_x);

  const SpectralField H = forward_fourier(h);
  std::vector<double> xisq(g.n);
  for (int k = 0; k < g.n; ++k) xisq[k] = g.xi(k) * g.xi(k);
  const double floor_xi = 1e-12 * H.values.abs().maxCoeff();
  v.sup_xi = weighted_sup_profile(H.values, xisq, 4.0 / (alpha * alpha), floor_xi);

  const double r = 1.0 / (alpha * beta);
  if (std::abs(r - 0.25) <= 1e-12 * 0.25)
    v.regime = HardyRegime::endpoint;
  else if (r > 0.25)
    v.regime = HardyRegime::subcritical;
  else
    v.regime = HardyRegime::supercritical;

  const bool both = v.sup_x.resolved && v.sup_xi.resolved;
  if (both && v.regime == HardyRegime::subcritical)
    v.classification = HardyClass::consistent_only_with_zero;
  else if (both && v.regime == HardyRegime::endpoint)
    v.classification = HardyClass::consistent_with_gaussian_line;
  else
    v.classification = HardyClass::unconstrained;
  return v;
}

std::vector<ScanRow> gaussian_family_scan(const std::vector<double>& gammas, double alpha,
                                          double beta) {
  std::vector<ScanRow> rows;
  const double tol = 1e-12;
  for (double gamma : gammas) {
    ScanRow row;
    row.gamma = gamma;
    // sup e^{w x^2} e^{-gamma x^2} finite iff w <= gamma
    row.x_side_finite = 1.0 / (beta * beta) <= gamma * (1 + tol);
    const ComplexGaussian hat = gauss_fourier(make_gaussian(1, 1.0, gamma));
    row.xi_side_finite = 4.0 / (alpha * alpha) <= hat.quad.real() * (1 + tol);
    rows.push_back(row);
  }
  return rows;
}

std::optional<std::pair<double, double>> doubly_finite_interval(double alpha, double beta) {
  const double lo = 1.0 / (beta * beta);
  // transform-side endpoint through the oracle: decay rate of F[e^{-gamma x^2}]
  // equals 4/alpha^2 exactly when gamma = alpha^2/16
  const double hi = alpha * alpha / 16.0;
  if (lo > hi * (1 + 1e-12)) return std::nullopt;
  return std::make_pair(lo, hi);
}

BeurlingReport beurling_integral(const SampledField& h, double cutoff) {
  require_1d(h, "beurling_integral");
  const Grid& g = h.grid;
  if (cutoff > g.half_width || cutoff > g.xi_max())
    throw std::invalid_argument("beurling_integral: cutoff exceeds the grid or dual span");
  const SpectralField H = forward_fourier(h);

  const double floor_x = 1e-12 * h.values.abs().maxCoeff();
  const double floor_xi = 1e-12 * H.values.abs().maxCoeff();

  auto log_integral = [&](double cut) {
    std::vector<double> lx, lxi, ax, axi;
    for (int j = 0; j < g.n; ++j) {
      const double m = std::abs(h.values[j]);
      if (std::abs(g.x(j)) <= cut && m >= floor_x && m > 0) {
        lx.push_back(std::log(m));
        ax.push_back(std::abs(g.x(j)));
      }
    }
    for (int k = 0; k < g.n; ++k) {
      const double m = std::abs(H.values[k]);
      if (std::abs(g.xi(k)) <= cut && m >= floor_xi && m > 0) {
        lxi.push_back(std::log(m));
        axi.push_back(std::abs(g.xi(k)));
      }
    }
    if (lx.empty() || lxi.empty()) return -std::numeric_limits<double>::infinity();
    double peak = -std::numeric_limits<double>::infinity();
    for (size_t a = 0; a < lx.size(); ++a)
      for (size_t b = 0; b < lxi.size(); ++b)
        peak = std::max(peak, lx[a] + lxi[b] + ax[a] * axi[b]);
    double acc = 0;
    for (size_t a = 0; a < lx.size(); ++a)
      for (size_t b = 0; b < lxi.size(); ++b)
        acc += std::exp(lx[a] + lxi[b] + ax[a] * axi[b] - peak);
    return peak + std::log(acc) + std::log(g.dx) + std::log(g.dxi);
  };

  BeurlingReport rep;
  rep.cutoff = cutoff;
  rep.log_value = log_integral(cutoff);
  rep.log_value_half = log_integral(cutoff / 2);
  rep.diverging = rep.log_value > 700.0;
  rep.value = rep.diverging ? std::numeric_limits<double>::infinity() : std::exp(rep.log_value);
  rep.value_half = std::exp(rep.log_value_half);
  rep.growth_ratio = std::isinf(rep.log_value) && std::isinf(rep.log_value_half)
                         ? 0.0
                         : std::exp(rep.log_value - rep.log_value_half);
  return rep;
}

} // namespace hardy
