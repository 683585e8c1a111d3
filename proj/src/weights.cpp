#include "hardy/weights.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hardy/propagator.hpp"

namespace hardy {

namespace {

double sq(double v) { return v * v; }

// log of |x|^2-weighted squared integrand per sample, gamma-weighted:
// lw_j = 2 gamma |x_j|^2 + 2 log|f_j|.
Eigen::ArrayXd log_weighted_sq(const SampledField& f, double gamma) {
  const Grid& g = f.grid;
  Eigen::ArrayXd lw(g.total_points());
  if (g.dim == 1) {
    for (int j = 0; j < g.n; ++j) {
      const double m = std::abs(f.values[j]);
      lw[j] = 2 * gamma * sq(g.x(j)) + (m > 0 ? 2 * std::log(m) : -std::numeric_limits<double>::infinity());
    }
  } else {
    for (int j0 = 0; j0 < g.n; ++j0)
      for (int j1 = 0; j1 < g.n; ++j1) {
        const double m = std::abs(f.values[g.index(j0, j1)]);
        lw[g.index(j0, j1)] = 2 * gamma * (sq(g.x(j0)) + sq(g.x(j1))) +
                              (m > 0 ? 2 * std::log(m) : -std::numeric_limits<double>::infinity());
      }
  }
  return lw;
}

// Max of lw over the cells where the resolved region ends: box boundary
// cells plus nonzero cells adjacent to a zero cell. The weighted tail is
// considered resolved only if the integrand has decayed there.
double edge_max_of(const Grid& g, const SampledField& f, const Eigen::ArrayXd& lw) {
  double m = -std::numeric_limits<double>::infinity();
  auto zero = [&](long i) { return f.values[i] == cplx(0); };
  if (g.dim == 1) {
    m = std::max(lw[0], lw[g.n - 1]);
    for (int j = 1; j + 1 < g.n; ++j) {
      if (zero(j)) continue;
      if (zero(j - 1) || zero(j + 1)) m = std::max(m, lw[j]);
    }
  } else {
    const int n = g.n;
    for (int j = 0; j < n; ++j)
      m = std::max({m, lw[g.index(0, j)], lw[g.index(n - 1, j)], lw[g.index(j, 0)],
                    lw[g.index(j, n - 1)]});
    for (int j0 = 1; j0 + 1 < n; ++j0)
      for (int j1 = 1; j1 + 1 < n; ++j1) {
        const long i = g.index(j0, j1);
        if (zero(i)) continue;
        if (zero(g.index(j0 - 1, j1)) || zero(g.index(j0 + 1, j1)) ||
            zero(g.index(j0, j1 - 1)) || zero(g.index(j0, j1 + 1)))
          m = std::max(m, lw[i]);
      }
  }
  return m;
}

} // namespace

double smallest_root_R(double alpha, double beta, double T) {
  if (!(alpha > 0) || !(beta > 0) || !(T > 0))
    throw std::invalid_argument("smallest_root_R: alpha, beta, T must be positive");
  const double disc = sq(alpha * beta) - 16.0 * sq(T);
  if (disc < 0)
    throw std::domain_error("smallest_root_R: beyond Hardy endpoint, T/(alpha beta) > 1/4");
  return (alpha * beta - std::sqrt(disc)) / (4.0 * T);
}

WeightSpec make_weight_spec(double alpha, double beta, double T) {
  WeightSpec w;
  w.alpha = alpha;
  w.beta = beta;
  w.T = T;
  w.R = smallest_root_R(alpha, beta, T);
  return w;
}

double decay_rate_a(double t, const WeightSpec& w) {
  if (t < 0 || t > w.T) throw std::domain_error("decay_rate_a: t outside [0, T]");
  const double p = w.alpha * t + w.beta * (w.T - t);
  const double q = w.alpha * t - w.beta * (w.T - t);
  return w.alpha * w.beta * w.R * w.T / (2 * sq(p) + 2 * sq(w.R) * sq(q));
}

bool interior_min_condition(const WeightSpec& w) {
  return std::abs(w.alpha - w.beta) < sq(w.R) * (w.alpha + w.beta);
}

double weighted_l2_norm(const SampledField& f, double gamma) {
  const Grid& g = f.grid;
  if (f.values.abs().maxCoeff() == 0) return 0.0;
  const Eigen::ArrayXd lw = log_weighted_sq(f, gamma);
  const double peak = lw.maxCoeff();
  // squared integrand must have decayed to the relative floor where the
  // resolved region ends
  if (edge_max_of(g, f, lw) > std::log(kBoundaryFloor) + peak)
    throw std::domain_error("weighted_l2_norm: domain too small for weight gamma = " +
                            std::to_string(gamma) + " (unresolved weighted tail)");
  const double lse = peak + std::log((lw - peak).exp().sum());
  return std::exp(0.5 * (lse + g.dim * std::log(g.dx)));
}

Lemma1Report check_lemma1(const SampledField& h, const WeightSpec& w,
                          const std::vector<double>& times) {
  for (double t : times)
    if (t < 0 || t > w.T) throw std::domain_error("check_lemma1: time outside [0, T]");

  Lemma1Report rep;
  rep.weight = w;
  rep.times = times;
  // evolved fields carry FFT roundoff in the far tail; drop numerically
  // silent cells before weighting
  rep.rhs = weighted_l2_norm(floor_noise(h), 1.0 / sq(w.beta)) +
            weighted_l2_norm(floor_noise(evolve_spectral(h, w.T).field), 1.0 / sq(w.alpha));
  rep.min_margin = std::numeric_limits<double>::infinity();
  for (double t : times) {
    const double lhs =
        weighted_l2_norm(floor_noise(evolve_spectral(h, t).field), decay_rate_a(t, w));
    rep.lhs.push_back(lhs);
    rep.min_margin = std::min(rep.min_margin, rep.rhs - lhs);
  }
  return rep;
}

DecayProfile fit_gaussian_decay(const SampledField& f) {
  const Grid& g = f.grid;
  const double floor = kBoundaryFloor * f.values.abs().maxCoeff();
  std::vector<double> r2, logm;
  for (long i = 0; i < g.total_points(); ++i) {
    const double m = std::abs(f.values[i]);
    if (m < floor || m == 0) continue;
    double rr;
    if (g.dim == 1) {
      rr = sq(g.x((int)i));
    } else {
      rr = sq(g.x(int(i / g.n))) + sq(g.x(int(i % g.n)));
    }
    r2.push_back(rr);
    logm.push_back(std::log(m));
  }
  if (r2.size() < 16)
    throw std::domain_error("fit_gaussian_decay: too few samples above the floor");

  Eigen::MatrixXd A(r2.size(), 2);
  Eigen::VectorXd y(r2.size());
  for (size_t i = 0; i < r2.size(); ++i) {
    A(i, 0) = 1.0;
    A(i, 1) = -r2[i];
    y(i) = logm[i];
  }
  const Eigen::Vector2d c = (A.transpose() * A).ldlt().solve(A.transpose() * y);
  DecayProfile p;
  p.amplitude = std::exp(c[0]);
  p.rate = c[1];
  p.residual = std::sqrt((A * c - y).squaredNorm() / double(r2.size()));
  return p;
}

} // namespace hardy
