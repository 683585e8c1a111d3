#include "hardy/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hardy/fourier.hpp"
#include "hardy/propagator.hpp"

namespace hardy {

namespace {

constexpr cplx kI{0.0, 1.0};

// The quotient u/G spans more dynamic range than doubles hold, so its far
// tail truncates at the representability edge of u. A slice is accepted when
// the quotient has decayed by this factor before the edge; constants and
// growing quotients (failing transported-decay hypothesis) stay flagged.
constexpr double kQuotientEdgeFloor = 1e-6;

void check_times(const Eigen::ArrayXd& times) {
  for (int i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw std::invalid_argument("times must be strictly increasing");
  if (times.size() > 2) {
    const double dt = times[1] - times[0];
    for (int i = 1; i + 1 < times.size(); ++i)
      if (std::abs((times[i + 1] - times[i]) - dt) > 1e-9 * std::max(1.0, std::abs(dt)))
        throw std::invalid_argument("times must be uniformly spaced");
  }
}

// lambda.xi and |xi|^2 per grid point.
Eigen::ArrayXd lambda_dot_xi(const Grid& g, const Eigen::Vector2d& lambda) {
  Eigen::ArrayXd v(g.total_points());
  if (g.dim == 1) {
    for (int k = 0; k < g.n; ++k) v[k] = lambda[0] * g.xi(k);
  } else {
    for (int k0 = 0; k0 < g.n; ++k0)
      for (int k1 = 0; k1 < g.n; ++k1)
        v[g.index(k0, k1)] = lambda[0] * g.xi(k0) + lambda[1] * g.xi(k1);
  }
  return v;
}

Eigen::ArrayXd xi_squared(const Grid& g) {
  Eigen::ArrayXd v(g.total_points());
  if (g.dim == 1) {
    for (int k = 0; k < g.n; ++k) v[k] = g.xi(k) * g.xi(k);
  } else {
    for (int k0 = 0; k0 < g.n; ++k0)
      for (int k1 = 0; k1 < g.n; ++k1)
        v[g.index(k0, k1)] = g.xi(k0) * g.xi(k0) + g.xi(k1) * g.xi(k1);
  }
  return v;
}

// xi . grad of one slice, spectral per axis.
Eigen::ArrayXcd xi_grad(const Grid& g, const Eigen::ArrayXcd& slice) {
  Eigen::ArrayXcd out = Eigen::ArrayXcd::Zero(slice.size());
  for (int axis = 0; axis < g.dim; ++axis) {
    SpectralField F = make_spectral_field(g, slice);
    Eigen::ArrayXcd d = spectral_derivative(F, axis).values;
    if (g.dim == 1) {
      for (int k = 0; k < g.n; ++k) out[k] += g.xi(k) * d[k];
    } else {
      for (int k0 = 0; k0 < g.n; ++k0)
        for (int k1 = 0; k1 < g.n; ++k1)
          out[g.index(k0, k1)] += g.xi(axis == 0 ? k0 : k1) * d[g.index(k0, k1)];
    }
  }
  return out;
}

// Operator inputs must decay at the frequency boundary. The threshold sits
// above the xi_max^2-amplified roundoff floor of nested spectral
// applications, which reaches ~1e-12 on wide dual grids.
void require_schwartz_like(const Grid& g, const Eigen::ArrayXcd& slice, double t) {
  if (boundary_ratio(g, slice) > 1e-10)
    throw std::domain_error("slice at t = " + std::to_string(t) +
                            " is not boundary-admissible on the frequency grid");
}

double slice_norm(const Eigen::MatrixXcd& values, int col) {
  return values.col(col).norm(); // quadrature weight cancels in every ratio used
}

// S, A, S_t share the structure  c1 * (xi.grad + n/2) + c2 * lambda.xi + c3.
SpaceTimeField apply_operator(const SpaceTimeField& f, const Eigen::Vector2d& lambda,
                              int which) {
  const Grid& g = f.grid;
  const int n = g.dim;
  const Eigen::ArrayXd lxi = lambda_dot_xi(g, lambda);
  Eigen::MatrixXcd out(f.values.rows(), f.values.cols());
  for (int c = 0; c < f.times.size(); ++c) {
    const double t = f.times[c];
    const double opt2 = 1 + t * t;
    const Eigen::ArrayXcd slice = f.values.col(c).array();
    require_schwartz_like(g, slice, t);
    const Eigen::ArrayXcd core = xi_grad(g, slice) + 0.5 * n * slice;
    require_schwartz_like(g, core, t);
    cplx c1, c2, c3;
    switch (which) {
      case 0: // S
        c1 = kI / opt2;
        c2 = -t / opt2;
        c3 = 0.5 * n * t / opt2;
        break;
      case 1: // A
        c1 = t / opt2;
        c2 = -kI / opt2;
        c3 = kI * (0.5 * n / opt2);
        break;
      default: // S_t
        c1 = -2.0 * kI * t / (opt2 * opt2);
        c2 = -(1 - t * t) / (opt2 * opt2);
        c3 = 0.5 * n * (1 - t * t) / (opt2 * opt2);
        break;
    }
    out.col(c) = (c1 * core + c2 * (lxi * slice) + c3 * slice).matrix();
  }
  SpaceTimeField r{g, f.times, std::move(out)};
  return r;
}

// Natural knots, clamped ends: cubic spline interpolation on non-uniform
// knots with end slopes from the cubic through the first/last four knots.
class CubicSpline {
 public:
  CubicSpline(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y) : x_(x), y_(y) {
    const int n = (int)x.size();
    if (n < 4) throw std::invalid_argument("spline needs at least 4 knots");
    const double s0 = end_slope(x, y, 0);
    const double s1 = end_slope(x, y, 1);
    // tridiagonal system for knot slopes m_i (clamped Hermite spline)
    Eigen::ArrayXd a(n), b(n), c(n), d(n);
    a.setZero();
    b.setOnes();
    c.setZero();
    d.setZero();
    d[0] = s0;
    d[n - 1] = s1;
    for (int i = 1; i + 1 < n; ++i) {
      const double hl = x[i] - x[i - 1], hr = x[i + 1] - x[i];
      a[i] = 1.0 / hl;
      b[i] = 2.0 * (1.0 / hl + 1.0 / hr);
      c[i] = 1.0 / hr;
      d[i] = 3.0 * ((y[i] - y[i - 1]) / (hl * hl) + (y[i + 1] - y[i]) / (hr * hr));
    }
    m_.resize(n);
    // Thomas algorithm
    for (int i = 1; i < n; ++i) {
      const double w = a[i] / b[i - 1];
      b[i] -= w * c[i - 1];
      d[i] -= w * d[i - 1];
    }
    m_[n - 1] = d[n - 1] / b[n - 1];
    for (int i = n - 2; i >= 0; --i) m_[i] = (d[i] - c[i] * m_[i + 1]) / b[i];
  }

  double operator()(double xq) const {
    const int n = (int)x_.size();
    int lo = int(std::upper_bound(x_.data(), x_.data() + n, xq) - x_.data()) - 1;
    lo = std::clamp(lo, 0, n - 2);
    const double h = x_[lo + 1] - x_[lo];
    const double u = (xq - x_[lo]) / h;
    const double h00 = (1 + 2 * u) * (1 - u) * (1 - u);
    const double h10 = u * (1 - u) * (1 - u);
    const double h01 = u * u * (3 - 2 * u);
    const double h11 = u * u * (u - 1);
    return h00 * y_[lo] + h10 * h * m_[lo] + h01 * y_[lo + 1] + h11 * h * m_[lo + 1];
  }

 private:
  static double end_slope(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y, int side) {
    // derivative of the Lagrange cubic through four end knots, at the end knot
    const int n = (int)x.size();
    int idx[4];
    for (int i = 0; i < 4; ++i) idx[i] = side == 0 ? i : n - 4 + i;
    const double xe = side == 0 ? x[idx[0]] : x[idx[3]];
    double slope = 0;
    for (int i = 0; i < 4; ++i) {
      double term = 0;
      for (int j = 0; j < 4; ++j) {
        if (j == i) continue;
        double prod = 1;
        for (int k = 0; k < 4; ++k) {
          if (k == i || k == j) continue;
          prod *= (xe - x[idx[k]]) / (x[idx[i]] - x[idx[k]]);
        }
        term += prod / (x[idx[i]] - x[idx[j]]);
      }
      slope += y[idx[i]] * term;
    }
    return slope;
  }

  Eigen::ArrayXd x_, y_, m_;
};

} // namespace

SpaceTimeField make_space_time_field(const Grid& g, Eigen::ArrayXd times,
                                     Eigen::MatrixXcd values) {
  if (values.rows() != g.total_points() || values.cols() != times.size())
    throw std::invalid_argument("make_space_time_field: shape mismatch");
  check_times(times);
  if (!values.allFinite())
    throw std::invalid_argument("make_space_time_field: non-finite slice values");
  return {g, std::move(times), std::move(values)};
}

SpaceTimeField phi_from_wave_fields(const std::vector<SampledField>& u_slices,
                                    const std::vector<double>& times) {
  if (u_slices.empty() || u_slices.size() != times.size())
    throw std::invalid_argument("phi_from_wave_fields: slice/time count mismatch");
  const Grid& g = u_slices.front().grid;
  Eigen::MatrixXcd cols(g.total_points(), (Eigen::Index)times.size());
  std::vector<double> offenders;
  for (size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    const SampledField G = gaussian_free_wave(t, g);
    Eigen::ArrayXcd quotient(g.total_points());
    bool finite = true;
    for (long j = 0; j < g.total_points(); ++j) {
      if (u_slices[i].values[j] == cplx(0)) {
        quotient[j] = 0; // silent below the wave's floor; G may underflow there
      } else {
        quotient[j] = u_slices[i].values[j] / G.values[j];
        if (!std::isfinite(quotient[j].real()) || !std::isfinite(quotient[j].imag()))
          finite = false;
      }
    }
    if (!finite || resolution_edge_ratio(g, quotient) > kQuotientEdgeFloor) {
      offenders.push_back(t);
      continue;
    }
    cols.col((Eigen::Index)i) = forward_fourier(SampledField{g, quotient, true}).values.matrix();
  }
  if (!offenders.empty()) {
    std::ostringstream msg;
    msg << "phi_from_wave: quotient u/G not admissible at t = {";
    for (size_t i = 0; i < offenders.size(); ++i) msg << (i ? ", " : "") << offenders[i];
    msg << "} (transported decay hypothesis fails there)";
    throw std::domain_error(msg.str());
  }
  Eigen::ArrayXd ts = Eigen::Map<const Eigen::ArrayXd>(times.data(), (Eigen::Index)times.size());
  return make_space_time_field(g, std::move(ts), std::move(cols));
}

SpaceTimeField phi_from_wave(const SampledField& h, const std::vector<double>& times) {
  std::vector<SampledField> slices;
  slices.reserve(times.size());
  for (double t : times) slices.push_back(floor_noise(evolve_spectral(h, t).field));
  return phi_from_wave_fields(slices, times);
}

SpaceTimeField phi_from_gaussian_wave(const ComplexGaussian& h, const Grid& grid,
                                      const std::vector<double>& times) {
  std::vector<SampledField> slices;
  slices.reserve(times.size());
  for (double t : times) slices.push_back(gauss_eval(gauss_evolve(h, t), grid));
  return phi_from_wave_fields(slices, times);
}

std::vector<double> phi_admissible_times(const SampledField& h,
                                         const std::vector<double>& times) {
  std::vector<double> kept;
  for (double t : times) {
    try {
      phi_from_wave(h, {t});
      kept.push_back(t);
    } catch (const std::domain_error&) {
    }
  }
  return kept;
}

double phi_equation_residual(const SpaceTimeField& phi) {
  if (phi.times.size() < 3)
    throw std::invalid_argument("phi_equation_residual: need at least 3 times");
  const Grid& g = phi.grid;
  const int n = g.dim;
  const double dt = phi.dt();
  const Eigen::ArrayXd xi2 = xi_squared(g);
  double worst = 0;
  for (int c = 1; c + 1 < phi.times.size(); ++c) {
    const double t = phi.times[c];
    const cplx tmi(t, -1.0);
    const Eigen::ArrayXcd slice = phi.values.col(c).array();
    const Eigen::ArrayXcd dphi = (phi.values.col(c + 1) - phi.values.col(c - 1)).array() / (2 * dt);
    const Eigen::ArrayXcd resid =
        dphi - xi_grad(g, slice) / tmi - (double(n) / tmi) * slice + kI * (xi2 * slice);
    worst = std::max(worst, std::sqrt(resid.abs2().sum() / slice.abs2().sum()));
  }
  return worst;
}

SpaceTimeField f_lambda(const SpaceTimeField& phi, const Eigen::Vector2d& lambda) {
  const Grid& g = phi.grid;
  const Eigen::ArrayXd lxi = lambda_dot_xi(g, lambda);
  const Eigen::ArrayXd xi2 = xi_squared(g);
  Eigen::MatrixXcd out(phi.values.rows(), phi.values.cols());
  for (int c = 0; c < phi.times.size(); ++c) {
    const double t = phi.times[c];
    const Eigen::ArrayXd logw = lxi - 0.5 * (1 + t * t) * xi2;
    const Eigen::ArrayXcd weighted = logw.exp() * phi.values.col(c).array();
    if (boundary_ratio(g, weighted) > kBoundaryFloor)
      throw std::domain_error("f_lambda: weighted slice at t = " + std::to_string(t) +
                              " is not boundary-admissible");
    out.col(c) = weighted.matrix();
  }
  return {g, phi.times, std::move(out)};
}

SpaceTimeField apply_S(const SpaceTimeField& f, const Eigen::Vector2d& lambda) {
  return apply_operator(f, lambda, 0);
}
SpaceTimeField apply_A(const SpaceTimeField& f, const Eigen::Vector2d& lambda) {
  return apply_operator(f, lambda, 1);
}
SpaceTimeField apply_S_t(const SpaceTimeField& f, const Eigen::Vector2d& lambda) {
  return apply_operator(f, lambda, 2);
}

std::pair<double, double> commutator_identity_residuals(const SpaceTimeField& f,
                                                        const Eigen::Vector2d& lambda) {
  const Grid& g = f.grid;
  const int n = g.dim;
  const Eigen::ArrayXd lxi = lambda_dot_xi(g, lambda);
  const SpaceTimeField Sf = apply_S(f, lambda);
  const SpaceTimeField Af = apply_A(f, lambda);
  const SpaceTimeField SAf = apply_S(Af, lambda);
  const SpaceTimeField ASf = apply_A(Sf, lambda);
  const SpaceTimeField Stf = apply_S_t(f, lambda);

  double r1 = 0, r2 = 0;
  for (int c = 0; c < f.times.size(); ++c) {
    const double t = f.times[c];
    const double opt2 = 1 + t * t;
    const double nf = slice_norm(f.values, c);
    const Eigen::ArrayXcd comm = (SAf.values.col(c) - ASf.values.col(c)).array();
    const Eigen::ArrayXcd d1 = comm - (lxi / opt2) * f.values.col(c).array();
    r1 = std::max(r1, std::sqrt(d1.abs2().sum()) / nf);
    const Eigen::ArrayXcd d2 = opt2 * Stf.values.col(c).array() + opt2 * comm +
                               2 * t * Sf.values.col(c).array() -
                               0.5 * n * f.values.col(c).array();
    r2 = std::max(r2, std::sqrt(d2.abs2().sum()) / nf);
  }
  return {r1, r2};
}

ConvexityTrace make_convexity_trace(Eigen::ArrayXd times, Eigen::ArrayXd H, double epsilon,
                                    int dim) {
  if (times.size() != H.size()) throw std::invalid_argument("trace: size mismatch");
  if (times.size() < 5) throw std::invalid_argument("trace: need at least 5 times");
  check_times(times);
  const double dt = times[1] - times[0];
  for (int i = 1; i < times.size(); ++i)
    if (std::abs((times[i] - times[i - 1]) - dt) > 1e-9 * dt)
      throw std::invalid_argument("trace: times must be uniformly spaced");
  if (!(epsilon > 0)) throw std::invalid_argument("trace: epsilon must be positive");
  if (!H.isFinite().all() || (H < 0).any())
    throw std::invalid_argument("trace: H must be finite and nonnegative");
  return {std::move(times), std::move(H), epsilon, dim};
}

ConvexityTrace trace_of(const SpaceTimeField& f, double epsilon) {
  const double cell = std::pow(f.grid.dxi, f.grid.dim);
  Eigen::ArrayXd H(f.times.size());
  for (int c = 0; c < f.times.size(); ++c) H[c] = f.values.col(c).squaredNorm() * cell;
  return make_convexity_trace(f.times, std::move(H), epsilon, f.grid.dim);
}

ConvexityTrace gaussian_trace(const ComplexGaussian& h, const Grid& grid,
                              const std::vector<double>& times, double lambda,
                              double epsilon) {
  if (grid.dim != 1) throw std::invalid_argument("gaussian_trace: 1D only");
  Eigen::ArrayXd H((Eigen::Index)times.size());
  Eigen::ArrayXd ts((Eigen::Index)times.size());
  for (size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    SpaceTimeField phi = phi_from_gaussian_wave(h, grid, {t});
    const Eigen::ArrayXcd slice = phi.values.col(0).array();
    double acc = 0;
    for (int k = 0; k < grid.n; ++k) {
      const double xi = grid.xi(k);
      const double w = std::exp(lambda * xi - 0.5 * (1 + t * t) * xi * xi);
      acc += std::norm(w * slice[k]);
    }
    H[(Eigen::Index)i] = acc * grid.dxi;
    ts[(Eigen::Index)i] = t;
  }
  return make_convexity_trace(std::move(ts), std::move(H), epsilon, 1);
}

Eigen::ArrayXd log_convexity_defect_series(const ConvexityTrace& trace) {
  const int m = (int)trace.times.size();
  const double dt = trace.times[1] - trace.times[0];
  Eigen::ArrayXd y = (trace.H + trace.epsilon).log();
  Eigen::ArrayXd out(m - 2);
  for (int i = 1; i + 1 < m; ++i) {
    const double t = trace.times[i];
    const double ypp = (y[i + 1] - 2 * y[i] + y[i - 1]) / (dt * dt);
    const double yp = (y[i + 1] - y[i - 1]) / (2 * dt);
    out[i - 1] = (1 + t * t) * ypp + 2 * t * yp - trace.dim;
  }
  return out;
}

double log_convexity_defect(const ConvexityTrace& trace) {
  return log_convexity_defect_series(trace).minCoeff();
}

double theta_weight(double t, double T) {
  return (std::atan(T) - std::atan(t)) / (2 * std::atan(T));
}

double arctan_convexity_check(const ConvexityTrace& trace) {
  const int m = (int)trace.times.size();
  Eigen::ArrayXd s(m), K(m);
  for (int i = 0; i < m; ++i) {
    s[i] = std::atan(trace.times[i]);
    K[i] = std::log((trace.H[i] + trace.epsilon) /
                    std::pow(1 + trace.times[i] * trace.times[i], trace.dim / 2.0));
  }
  CubicSpline spline(s, K);
  const double ds = (s[m - 1] - s[0]) / (m - 1);
  Eigen::ArrayXd Ku(m);
  for (int i = 0; i < m; ++i) Ku[i] = spline(s[0] + i * ds);
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 1; i + 1 < m; ++i)
    worst = std::min(worst, Ku[i + 1] - 2 * Ku[i] + Ku[i - 1]);
  return worst;
}

std::vector<SweepRow> theorem3_sweep(const SpaceTimeField& phi,
                                     const std::vector<double>& lambdas, double T) {
  if (phi.grid.dim != 1) throw std::invalid_argument("theorem3_sweep: 1D only");
  const int m = (int)phi.times.size();
  const double n2 = phi.grid.dim / 2.0;

  double denom_sup = 0;
  double lo = 0, hi = 0;
  bool any = false;
  for (int c = 0; c < m; ++c) {
    const double t = phi.times[c];
    if (std::abs(t) > T) continue;
    if (!any) lo = t;
    hi = t;
    any = true;
    const double H0 = phi.values.col(c).squaredNorm() * phi.grid.dxi;
    denom_sup = std::max(denom_sup, H0 / std::pow(1 + t * t, n2));
  }
  if (!any) throw std::invalid_argument("theorem3_sweep: no times inside [-T, T]");

  std::vector<SweepRow> rows;
  for (double lam : lambdas) {
    SweepRow row;
    row.lambda = lam;
    row.window_lo = lo;
    row.window_hi = hi;
    try {
      const SpaceTimeField fl = f_lambda(phi, Eigen::Vector2d(lam, 0.0));
      double sup = 0;
      for (int c = 0; c < m; ++c) {
        const double t = phi.times[c];
        if (std::abs(t) > T) continue;
        const double Hl = fl.values.col(c).squaredNorm() * phi.grid.dxi;
        sup = std::max(sup, Hl / std::pow(1 + t * t, n2));
      }
      row.ratio = denom_sup == 0 ? 0.0
                                 : sup / (std::exp(lam * lam / (1 + T * T)) * denom_sup);
    } catch (const std::domain_error&) {
      row.admissible = false;
      row.ratio = std::numeric_limits<double>::quiet_NaN();
    }
    rows.push_back(row);
  }
  return rows;
}

} // namespace hardy
