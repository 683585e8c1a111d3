#include "hardy/propagator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hardy/fourier.hpp"

namespace hardy {

namespace {

constexpr cplx kI{0.0, 1.0};

double sgn(double t) { return t > 0 ? 1.0 : (t < 0 ? -1.0 : 0.0); }

// (c |t|)^{-n/2} e^{-i pi n sgn(t)/4}, the principal branch of (c i t)^{-n/2}.
cplx singular_prefactor(double c, double t, int n) {
  return std::polar(std::pow(c * std::abs(t), -0.5 * n), -M_PI * n * sgn(t) / 4.0);
}

} // namespace

const char* to_string(EvolveMethod m) {
  switch (m) {
    case EvolveMethod::spectral: return "spectral";
    case EvolveMethod::convolution: return "convolution";
    case EvolveMethod::pseudoconformal: return "pseudoconformal";
    case EvolveMethod::oracle: return "oracle";
  }
  return "?";
}

EvolvedWave evolve_spectral(const SampledField& h, double t) {
  const Grid& g = h.grid;
  SpectralField H = forward_fourier(h);
  if (g.dim == 1) {
    for (int k = 0; k < g.n; ++k) H.values[k] *= std::polar(1.0, -g.xi(k) * g.xi(k) * t);
  } else {
    for (int k0 = 0; k0 < g.n; ++k0)
      for (int k1 = 0; k1 < g.n; ++k1)
        H.values[g.index(k0, k1)] *=
            std::polar(1.0, -(g.xi(k0) * g.xi(k0) + g.xi(k1) * g.xi(k1)) * t);
  }
  return {t, EvolveMethod::spectral, inverse_fourier(H)};
}

EvolvedWave evolve_convolution(const SampledField& h, double t, double t_min) {
  const Grid& g = h.grid;
  if (std::abs(t) < t_min)
    throw std::domain_error("evolve_convolution: kernel too oscillatory for quadrature (|t| < t_min = " +
                            std::to_string(t_min) + ")");
  const cplx pref = singular_prefactor(4.0 * M_PI, t, g.dim) * std::pow(g.dx, g.dim);
  const double w = 1.0 / (4.0 * t);
  Eigen::ArrayXcd out(g.total_points());
  if (g.dim == 1) {
    for (int i = 0; i < g.n; ++i) {
      const double x = g.x(i);
      cplx s = 0;
      for (int j = 0; j < g.n; ++j) {
        const double d = x - g.x(j);
        s += std::polar(1.0, w * d * d) * h.values[j];
      }
      out[i] = pref * s;
    }
  } else {
    for (int i0 = 0; i0 < g.n; ++i0)
      for (int i1 = 0; i1 < g.n; ++i1) {
        const double x0 = g.x(i0), x1 = g.x(i1);
        cplx s = 0;
        for (int j0 = 0; j0 < g.n; ++j0)
          for (int j1 = 0; j1 < g.n; ++j1) {
            const double d0 = x0 - g.x(j0), d1 = x1 - g.x(j1);
            s += std::polar(1.0, w * (d0 * d0 + d1 * d1)) * h.values[g.index(j0, j1)];
          }
        out[g.index(i0, i1)] = pref * s;
      }
  }
  return {t, EvolveMethod::convolution, make_sampled_field(g, std::move(out))};
}

EvolvedWave evolve_pseudoconformal(const SampledField& h, double t, double t_min) {
  const Grid& g = h.grid;
  if (std::abs(t) < t_min)
    throw std::domain_error("evolve_pseudoconformal: time too small, |t| < t_min = " +
                            std::to_string(t_min));
  const double xmax = g.half_width - g.dx / 2;
  if (xmax / (2 * std::abs(t)) > g.xi_max())
    throw std::domain_error("evolve_pseudoconformal: time too small for domain, x/(2t) exceeds the dual grid span");

  const double w = 1.0 / (4.0 * t);
  Eigen::ArrayXcd chirped(g.total_points());
  if (g.dim == 1) {
    for (int j = 0; j < g.n; ++j)
      chirped[j] = std::polar(1.0, w * g.x(j) * g.x(j)) * h.values[j];
  } else {
    for (int j0 = 0; j0 < g.n; ++j0)
      for (int j1 = 0; j1 < g.n; ++j1)
        chirped[g.index(j0, j1)] =
            std::polar(1.0, w * (g.x(j0) * g.x(j0) + g.x(j1) * g.x(j1))) *
            h.values[g.index(j0, j1)];
  }
  SampledField wfield{g, std::move(chirped), h.boundary_admissible};

  const cplx pref = singular_prefactor(2.0, t, g.dim);
  Eigen::ArrayXcd out(g.total_points());
  if (g.dim == 1) {
    for (int i = 0; i < g.n; ++i) {
      const double x = g.x(i);
      out[i] = pref * std::polar(1.0, w * x * x) * spectrum_at(wfield, x / (2 * t));
    }
  } else {
    for (int i0 = 0; i0 < g.n; ++i0)
      for (int i1 = 0; i1 < g.n; ++i1) {
        const double x0 = g.x(i0), x1 = g.x(i1);
        out[g.index(i0, i1)] = pref * std::polar(1.0, w * (x0 * x0 + x1 * x1)) *
                               spectrum_at(wfield, x0 / (2 * t), x1 / (2 * t));
      }
  }
  return {t, EvolveMethod::pseudoconformal, make_sampled_field(g, std::move(out))};
}

SampledField v_transform(const std::function<SampledField(double)>& u_at, double t,
                         const Grid& target_grid, double t_min) {
  if (!(t > 0) || t > 1.0)
    throw std::domain_error("v_transform: t must lie in (0, 1]");
  if (t < t_min)
    throw std::domain_error("v_transform: t < t_min = " + std::to_string(t_min));

  const SampledField u = u_at(1.0 / t - 1.0);
  const Grid& src = u.grid;
  const Grid& tgt = target_grid;
  if (tgt.dim != src.dim) throw std::invalid_argument("v_transform: grid dimension mismatch");
  const double pmax = (tgt.half_width - tgt.dx / 2) / t;
  if (pmax > src.half_width)
    throw std::domain_error("v_transform: rescaled points x/t fall outside the source domain");

  SampledField ubar = make_sampled_field(src, u.values.conjugate());
  SpectralField Ubar = forward_fourier(ubar);

  const int n = tgt.dim;
  // (it)^{-n/2}, principal branch: t > 0 puts it on the positive imaginary axis
  const cplx pref = std::polar(std::pow(t, -0.5 * n), -M_PI * n / 4.0);
  const double w = 1.0 / (4.0 * t);

  Eigen::ArrayXcd out(tgt.total_points());
  if (n == 1) {
    for (int j = 0; j < tgt.n; ++j) {
      const double x = tgt.x(j);
      out[j] = pref * std::polar(1.0, w * x * x) * value_at(Ubar, x / t);
    }
  } else {
    for (int j0 = 0; j0 < tgt.n; ++j0)
      for (int j1 = 0; j1 < tgt.n; ++j1) {
        const double x0 = tgt.x(j0), x1 = tgt.x(j1);
        out[tgt.index(j0, j1)] = pref * std::polar(1.0, w * (x0 * x0 + x1 * x1)) *
                                 value_at(Ubar, x0 / t, x1 / t);
      }
  }
  return make_sampled_field(tgt, std::move(out));
}

ComplexGaussian v_transform_oracle(const ComplexGaussian& h, double t) {
  if (!(t > 0) || t > 1.0) throw std::domain_error("v_transform_oracle: t must lie in (0, 1]");
  const int n = h.dim;
  ComplexGaussian u = gauss_evolve(h, 1.0 / t - 1.0);
  ComplexGaussian scaled = gauss_dilate(gauss_conj(u), 1.0 / t);
  const cplx pref = std::polar(std::pow(t, -0.5 * n), -M_PI * n / 4.0);
  ComplexGaussian chirp = make_gaussian(n, pref, -kI / (4.0 * t));
  return gauss_product(chirp, scaled);
}

} // namespace hardy
