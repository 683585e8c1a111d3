// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. argv[1] names the hardy-lab binary for the CLI criterion.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hardy/convexity.hpp"
#include "hardy/equivalence.hpp"
#include "hardy/fourier.hpp"
#include "hardy/propagator.hpp"
#include "hardy/weights.hpp"

using namespace hardy;
namespace fs = std::filesystem;

namespace {

int failed = 0;

void report(int id, bool ok, const std::string& what) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
  if (!ok) ++failed;
}

double rel_l2(const Eigen::ArrayXcd& a, const Eigen::ArrayXcd& b) {
  return std::sqrt((a - b).abs2().sum() / b.abs2().sum());
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// ---------------------------------------------------------------- criterion 1
void criterion_fourier() {
  Grid g = make_grid(1, 1024, 20.0);
  double worst_plancherel = 0, worst_roundtrip = 0;
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const cplx a(0.15 + 1.5 * u01(rng), -0.8 + 1.6 * u01(rng));
    Eigen::Vector2cd b;
    b[0] = cplx(u01(rng) - 0.5, u01(rng) - 0.5);
    b[1] = 0;
    SampledField f = gauss_eval(make_gaussian(1, std::polar(1.0, u01(rng)), a, b), g);
    const double nf = l2_norm(f);
    worst_plancherel =
        std::max(worst_plancherel, std::abs(l2_norm(forward_fourier(f)) - nf) / nf);
    SampledField back = inverse_fourier(forward_fourier(f));
    worst_roundtrip = std::max(
        worst_roundtrip, (back.values - f.values).abs().maxCoeff() / f.values.abs().maxCoeff());
  }

  SampledField h = gauss_eval(make_gaussian(1, 1.0, 0.25), g);
  SpectralField H = forward_fourier(h);
  Eigen::ArrayXcd anchor(g.n);
  for (int k = 0; k < g.n; ++k) anchor[k] = std::sqrt(2.0) * std::exp(-g.xi(k) * g.xi(k));
  const double anchor_err = rel_l2(H.values, anchor);

  const bool ok = worst_plancherel <= 1e-12 && worst_roundtrip <= 1e-12 && anchor_err <= 1e-10;
  report(1, ok,
         "Fourier layer: Plancherel " + fmt(worst_plancherel) + ", round trip " +
             fmt(worst_roundtrip) + ", sqrt(2)e^{-xi^2} anchor " + fmt(anchor_err));
}

// ---------------------------------------------------------------- criterion 2
void criterion_propagators() {
  Grid g = make_grid(1, 4096, 34.0);
  double pseudo_worst = 0, conv_worst = 0;
  for (int k : {0, 1, 2, 3}) {
    SampledField h = sample_hermite_gaussian(g, k);
    for (double t : {0.1, -0.1, 0.5, -0.5, 2.0, -2.0}) {
      const Eigen::ArrayXcd us = evolve_spectral(h, t).field.values;
      pseudo_worst =
          std::max(pseudo_worst, rel_l2(evolve_pseudoconformal(h, t).field.values, us));
    }
  }
  for (int k : {0, 2}) {
    SampledField h = sample_hermite_gaussian(g, k);
    for (double t : {0.1, 1.0, 2.0}) {
      const Eigen::ArrayXcd us = evolve_spectral(h, t).field.values;
      conv_worst = std::max(conv_worst, rel_l2(evolve_convolution(h, t).field.values, us));
    }
  }

  Grid gd = make_grid(1, 1024, 20.0);
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double oracle_worst = 0;
  int accepted = 0;
  while (accepted < 30) {
    const cplx a(0.1 + 1.9 * u01(rng), -1.0 + 2.0 * u01(rng));
    Eigen::Vector2cd b;
    b[0] = std::polar(u01(rng), 2 * M_PI * u01(rng));
    b[1] = 0;
    ComplexGaussian cg = make_gaussian(1, std::polar(1.0, u01(rng)), a, b);
    const double t = -2.0 + 4.0 * u01(rng);
    SampledField expect = gauss_eval(gauss_evolve(cg, t), gd);
    if (!expect.boundary_admissible) continue; // wave left the box
    ++accepted;
    oracle_worst =
        std::max(oracle_worst, rel_l2(evolve_spectral(gauss_eval(cg, gd), t).field.values,
                                      expect.values));
  }

  const bool ok = conv_worst <= 1e-6 && pseudo_worst <= 1e-8 && oracle_worst <= 1e-9;
  report(2, ok,
         "propagator agreement: convolution " + fmt(conv_worst) + ", pseudoconformal " +
             fmt(pseudo_worst) + ", oracle " + fmt(oracle_worst));
}

// ---------------------------------------------------------------- criterion 3
void criterion_lemma1() {
  // endpoint closed forms
  WeightSpec endpoint = make_weight_spec(2, 2, 1);
  bool closed_ok = endpoint.R == 1.0;
  double a_err = 0;
  for (int i = 0; i <= 1000; ++i) {
    const double t = i / 1000.0;
    a_err = std::max(a_err, std::abs(decay_rate_a(t, endpoint) -
                                     1.0 / (4 * (1 - 2 * t * (1 - t)))));
  }
  double ends_err = 0;
  for (auto [al, be, T] : std::vector<std::tuple<double, double, double>>{
           {2, 2, 1}, {2, 1, 0.4}, {3, 2, 1}, {2.5, 1.7, 0.9}}) {
    WeightSpec w = make_weight_spec(al, be, T);
    ends_err = std::max(ends_err, std::abs(decay_rate_a(0, w) - 1 / (be * be)));
    ends_err = std::max(ends_err, std::abs(decay_rate_a(T, w) - 1 / (al * al)));
  }
  closed_ok = closed_ok && a_err <= 1e-12 && ends_err <= 1e-12;

  // 50 admissible, grid-resolvable triples with Gaussian data
  Grid g = make_grid(1, 1024, 20.0);
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  int done = 0;
  double worst_rel_margin = 1e300;
  while (done < 50) {
    const double alpha = 1.7 + 1.5 * u01(rng);
    const double beta = 1.7 + 1.5 * u01(rng);
    const double T = 0.05 + u01(rng) * std::min(alpha * beta / 4 - 0.05, 0.75);
    if (T <= 0 || T / (alpha * beta) > 0.25) continue;
    const double gamma = 0.3 + 0.7 * u01(rng);
    WeightSpec w = make_weight_spec(alpha, beta, T);

    // feasibility in closed form: every weight must stay well below the
    // wave's decay rate so the floored tails resolve (see weighted norms)
    auto rate = [&](double t) { return gamma / (1 + 16 * gamma * gamma * t * t); };
    bool feasible = (1 / (beta * beta)) / gamma <= 0.55 &&
                    (1 / (alpha * alpha)) / rate(T) <= 0.55;
    for (int i = 0; i <= 100 && feasible; ++i) {
      const double t = std::min(T, T * i / 100.0);
      feasible = decay_rate_a(t, w) / rate(t) <= 0.55;
    }
    if (!feasible) continue;

    ++done;
    std::vector<double> times;
    for (int i = 0; i <= 20; ++i) times.push_back(std::min(T, T * i / 20.0));
    Lemma1Report rep = check_lemma1(gauss_eval(make_gaussian(1, 1.0, gamma), g), w, times);
    worst_rel_margin = std::min(worst_rel_margin, rep.min_margin / rep.rhs);
  }

  const bool ok = closed_ok && worst_rel_margin >= -1e-8;
  report(3, ok,
         "decay interpolation: endpoint R/a(t) closed forms to " + fmt(std::max(a_err, ends_err)) +
             ", 50-triple sweep min relative margin " + fmt(worst_rel_margin));
}

// ---------------------------------------------------------------- criterion 4
void criterion_interpolation_convexity() {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  int done = 0;
  bool convex_ok = true, predicate_ok = true;
  while (done < 20) {
    const double alpha = 1.2 + 3 * u01(rng), beta = 1.2 + 3 * u01(rng);
    const double T = 0.05 + 0.95 * u01(rng) * alpha * beta / 4;
    if (T / (alpha * beta) > 0.25) continue;
    ++done;
    WeightSpec w = make_weight_spec(alpha, beta, T);
    const int m = 1000;
    std::vector<double> inv(m + 1);
    for (int i = 0; i <= m; ++i) inv[i] = 1.0 / decay_rate_a(std::min(T, T * i / m), w);
    const double scale = *std::max_element(inv.begin(), inv.end());
    int argmin = 0;
    for (int i = 1; i <= m; ++i)
      if (inv[i] < inv[argmin]) argmin = i;
    for (int i = 1; i < m; ++i)
      if (inv[i + 1] - 2 * inv[i] + inv[i - 1] < -1e-9 * scale) convex_ok = false;
    if (interior_min_condition(w) != (argmin > 0 && argmin < m)) predicate_ok = false;
  }
  report(4, convex_ok && predicate_ok,
         std::string("1/a convexity and interior-minimum predicate over 20 triples: ") +
             (convex_ok ? "convex" : "NOT convex") + ", predicate " +
             (predicate_ok ? "consistent" : "inconsistent"));
}

// ---------------------------------------------------------------- criterion 5
void criterion_operators() {
  double adj = 0;
  {
    Grid g = make_grid(1, 256, 8 * M_PI);
    std::mt19937_64 rng(505);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    auto mixture = [&]() {
      Eigen::ArrayXcd v = Eigen::ArrayXcd::Zero(g.n);
      for (int k = 0; k <= 6; ++k) {
        const cplx c(u(rng), u(rng));
        for (int j = 0; j < g.n; ++j)
          v[j] += c * hermite(k, g.xi(j)) * std::exp(-0.5 * g.xi(j) * g.xi(j));
      }
      return v;
    };
    const Eigen::Vector2d lambda(0.8, 0.0);
    for (double t : {-1.0, 0.0, 0.5, 3.0}) {
      for (int pair = 0; pair < 20; ++pair) {
        Eigen::ArrayXd ts(1);
        ts[0] = t;
        Eigen::MatrixXcd ca(g.n, 1), cb(g.n, 1);
        ca.col(0) = mixture().matrix();
        cb.col(0) = mixture().matrix();
        SpaceTimeField f = make_space_time_field(g, ts, ca);
        SpaceTimeField h = make_space_time_field(g, ts, cb);
        const double scale =
            std::sqrt(ca.col(0).squaredNorm() * cb.col(0).squaredNorm());
        const cplx s1 = (apply_S(f, lambda).values.col(0).array() *
                         cb.col(0).array().conjugate()).sum();
        const cplx s2 = (ca.col(0).array() *
                         apply_S(h, lambda).values.col(0).array().conjugate()).sum();
        adj = std::max(adj, std::abs(s1 - s2) / scale);
        const cplx a1 = (apply_A(f, lambda).values.col(0).array() *
                         cb.col(0).array().conjugate()).sum();
        const cplx a2 = (ca.col(0).array() *
                         apply_A(h, lambda).values.col(0).array().conjugate()).sum();
        adj = std::max(adj, std::abs(a1 + a2) / scale);
      }
    }
  }

  double r1w = 0, r2w = 0;
  {
    Grid g = make_grid(1, 256, 8 * M_PI);
    std::mt19937_64 rng(606);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (double lam : {0.0, 1.0, -1.0, 2.0}) {
      for (double t : {-1.0, 0.0, 0.5, 3.0}) {
        Eigen::ArrayXcd v = Eigen::ArrayXcd::Zero(g.n);
        for (int k = 0; k <= 6; ++k) {
          const cplx c(u(rng), u(rng));
          for (int j = 0; j < g.n; ++j)
            v[j] += c * hermite(k, g.xi(j)) * std::exp(-0.5 * g.xi(j) * g.xi(j));
        }
        Eigen::ArrayXd ts(1);
        ts[0] = t;
        Eigen::MatrixXcd cols(g.n, 1);
        cols.col(0) = v.matrix();
        auto [r1, r2] =
            commutator_identity_residuals(make_space_time_field(g, ts, cols),
                                          Eigen::Vector2d(lam, 0.0));
        r1w = std::max(r1w, r1);
        r2w = std::max(r2w, r2);
      }
    }
    // 2D tensor-Hermite run
    Grid g2 = make_grid(2, 96, 4.8 * M_PI);
    Eigen::ArrayXcd v2(g2.total_points());
    for (int k0 = 0; k0 < g2.n; ++k0)
      for (int k1 = 0; k1 < g2.n; ++k1) {
        const double a = g2.xi(k0), b = g2.xi(k1);
        v2[g2.index(k0, k1)] = (hermite(2, a) * hermite(1, b) + 0.4 * hermite(4, a)) *
                               std::exp(-0.5 * (a * a + b * b));
      }
    Eigen::ArrayXd ts(1);
    ts[0] = 0.5;
    Eigen::MatrixXcd cols(v2.size(), 1);
    cols.col(0) = v2.matrix();
    auto [r1, r2] = commutator_identity_residuals(make_space_time_field(g2, ts, cols),
                                                  Eigen::Vector2d(1.0, -0.5));
    r1w = std::max(r1w, r1);
    r2w = std::max(r2w, r2);
  }

  const bool ok = adj <= 1e-8 && r1w <= 1e-7 && r2w <= 1e-7;
  report(5, ok,
         "operator identities: adjointness " + fmt(adj) + ", commutator " + fmt(r1w) +
             ", coefficient identity " + fmt(r2w) + " (n = 1, 2)");
}

// ---------------------------------------------------------------- criterion 6
void criterion_log_convexity() {
  auto equality_defect = [](double dt) {
    const int half = (int)std::lround(0.1 / dt);
    const int m = 2 * half + 1;
    Eigen::ArrayXd times(m), H(m);
    for (int i = 0; i < m; ++i) {
      times[i] = (i - half) * dt;
      H[i] = std::sqrt(1 + times[i] * times[i]);
    }
    return log_convexity_defect(make_convexity_trace(times, H, 1e-12, 1));
  };
  const double eq1 = equality_defect(1e-3);
  const double eq2 = equality_defect(2e-3);
  const bool equality_ok = std::abs(eq1) <= 1e-6;
  const double eq_ratio = std::abs(eq2 / eq1);
  const bool eq_conv_ok = eq_ratio >= 3.2 && eq_ratio <= 4.8;

  Grid g = make_grid(1, 2048, 70.0);
  ComplexGaussian h = make_gaussian(1, 1.0, 0.3);
  std::vector<double> times;
  for (int i = -800; i <= 800; ++i) times.push_back(i * 1e-3);
  ConvexityTrace tr = gaussian_trace(h, g, times, 0.5, 1e-6);
  const double defect = log_convexity_defect(tr);
  const double arc = arctan_convexity_check(tr);

  // pointwise defect at t0 = 0.3 under dt halving, three levels
  auto defect_at = [&](double dt) {
    std::vector<double> ts;
    for (int i = -2; i <= 2; ++i) ts.push_back(0.3 + i * dt);
    ConvexityTrace t5 = gaussian_trace(h, g, ts, 0.5, 1e-6);
    return log_convexity_defect_series(t5)[1]; // the t0 slice
  };
  const double d4 = defect_at(4e-3), d2 = defect_at(2e-3), d1 = defect_at(1e-3);
  const double ratio = (d4 - d2) / (d2 - d1);
  const bool conv_ok = ratio >= 3.2 && ratio <= 4.8;

  const bool ok = equality_ok && eq_conv_ok && defect >= -1e-4 && arc >= -1e-6 && conv_ok;
  report(6, ok,
         "log-convexity: equality defect " + fmt(eq1) + " (ratio " + fmt(eq_ratio) +
             "), free-wave defect " + fmt(defect) + ", arctan " + fmt(arc) +
             ", dt-halving ratio " + fmt(ratio));
}

// ---------------------------------------------------------------- criterion 7
void criterion_phi() {
  Grid g = make_grid(1, 2048, 70.0);
  ComplexGaussian h = make_gaussian(1, 1.0, 0.3);
  auto window = [](double t0, double dt) {
    std::vector<double> ts;
    for (int i = -2; i <= 2; ++i) ts.push_back(t0 + i * dt);
    return ts;
  };
  const double res_gauss = phi_equation_residual(phi_from_gaussian_wave(h, g, window(0.2, 1e-3)));

  Grid gs = make_grid(1, 2048, 40.0);
  std::vector<SampledField> slices;
  std::vector<double> ts = window(-0.55, 1e-3);
  for (double t : ts) slices.push_back(gaussian_free_wave(t + 0.5, gs));
  const double res_shift = phi_equation_residual(phi_from_wave_fields(slices, ts));

  std::vector<double> sweep_times;
  for (int i = -40; i <= 40; ++i) sweep_times.push_back(i * 0.02);
  SpaceTimeField phi = phi_from_gaussian_wave(h, g, sweep_times);
  double ratio_worst = 0;
  for (const SweepRow& r : theorem3_sweep(phi, {0.0, 1.0, 2.0}, 0.8))
    ratio_worst = std::max(ratio_worst, r.ratio);

  const bool ok = res_gauss <= 1e-4 && res_shift <= 1e-4 && ratio_worst <= 1 + 1e-4;
  report(7, ok,
         "phi machinery: equation residual " + fmt(res_gauss) + " (Gaussian), " +
             fmt(res_shift) + " (shifted G), sweep ratio " + fmt(ratio_worst));
}

// ---------------------------------------------------------------- criterion 8
void criterion_reductions() {
  Grid g = make_grid(1, 1024, 20.0);
  auto poly_gauss = [&](const std::vector<double>& coeffs) {
    return sample_function(g, [&](double x) {
      double p = 0, xp = 1;
      for (double c : coeffs) {
        p += c * xp;
        xp *= x;
      }
      return cplx(p * std::exp(-0.25 * x * x), 0);
    });
  };

  SampledField gauss = poly_gauss({1.0});
  const double t_zero = reduce_T(gauss).values.abs().maxCoeff() / gauss.values.abs().maxCoeff();
  const double t_shift = rel_l2(reduce_T(poly_gauss({0.0, 1.0})).values, gauss.values);

  // sign-convolution identity on a polynomial-Gaussian datum
  SampledField h = poly_gauss({0.3, -1.1, 0.4, 0.9});
  const cplx h0 = value_at(forward_fourier(h), 0.0);
  Eigen::ArrayXcd centered(g.n);
  for (int j = 0; j < g.n; ++j)
    centered[j] = h.values[j] - h0 * std::exp(-0.25 * g.x(j) * g.x(j));
  const Eigen::ArrayXcd lhs = forward_fourier(reduce_T(h)).values;
  const Eigen::ArrayXcd rhs =
      cplx(0, -0.5) *
      sign_convolution(forward_fourier(make_sampled_field(g, centered))).values;
  const double id_err = rel_l2(lhs, rhs);

  // degree-reduction chain through k = 4
  std::mt19937_64 rng(808);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double chain_worst = 0, collapse_worst = 0;
  SampledField line = poly_gauss({1.0});
  for (int k = 0; k <= 4; ++k) {
    std::vector<double> coeffs(k + 1);
    for (double& c : coeffs) c = u(rng);
    coeffs[k] += coeffs[k] < 0 ? -0.5 : 0.5;
    SampledField hk = poly_gauss(coeffs);
    const double nh = std::sqrt(hk.values.abs2().sum());
    SampledField tk = iterate_T(hk, k);
    const cplx c = inner(tk, line) / inner(line, line);
    chain_worst = std::max(
        chain_worst, std::sqrt((tk.values - c * line.values).abs2().sum()) / nh);
    collapse_worst =
        std::max(collapse_worst, std::sqrt(iterate_T(hk, k + 1).values.abs2().sum()) / nh);
  }

  double hermite_worst = 0;
  for (int k = 0; k <= 5; ++k) {
    SampledField psi = sample_hermite_gaussian(g, k);
    const cplx eig = std::pow(cplx(0, -1), k);
    Eigen::ArrayXcd expect(g.n);
    for (int j = 0; j < g.n; ++j)
      expect[j] = eig * hermite(k, g.xi(j)) * std::exp(-0.5 * g.xi(j) * g.xi(j));
    hermite_worst = std::max(hermite_worst, rel_l2(forward_fourier(psi).values, expect));
  }

  Grid gp = make_grid(1, 512, 14.0);
  double psi_worst = 0;
  for (int k = 0; k <= 4; ++k) {
    auto [r1, r2] = psi_identity_residuals(sample_hermite_gaussian(gp, k));
    psi_worst = std::max({psi_worst, r1, r2});
  }

  const bool ok = t_zero <= 1e-12 && t_shift <= 1e-12 && id_err <= 1e-8 &&
                  chain_worst <= 1e-8 && collapse_worst <= 1e-8 && hermite_worst <= 1e-10 &&
                  psi_worst <= 1e-8;
  report(8, ok,
         "reductions: T(gauss) " + fmt(t_zero) + ", T(x gauss) " + fmt(t_shift) +
             ", sgn-convolution " + fmt(id_err) + ", chain " + fmt(chain_worst) + "/" +
             fmt(collapse_worst) + ", Hermite " + fmt(hermite_worst) + ", Psi " +
             fmt(psi_worst));
}

// ---------------------------------------------------------------- criterion 9
void criterion_hardy_region() {
  bool ok = true;
  int count = 0;
  for (double alpha : {1.6, 1.8, 2.0, 2.2, 2.5, 2.8, 3.0}) {
    for (double beta : {1.3, 1.6, 2.0, 2.3, 2.5, 2.9, 3.1}) {
      ++count;
      const auto iv = doubly_finite_interval(alpha, beta);
      if (iv.has_value() != (alpha * beta >= 4.0 * (1 - 1e-12))) ok = false;
      if (!iv) continue;
      // scan rows agree with the interval
      std::vector<double> gammas{iv->first, 0.5 * (iv->first + iv->second), iv->second,
                                 0.8 * iv->first, 1.2 * iv->second};
      for (const ScanRow& r : gaussian_family_scan(gammas, alpha, beta)) {
        const bool inside =
            r.gamma >= iv->first - 1e-12 && r.gamma <= iv->second + 1e-12;
        if ((r.x_side_finite && r.xi_side_finite) != inside) ok = false;
      }
    }
  }
  // endpoint product: the region degenerates to gamma = 1/beta^2
  const auto endpoint = doubly_finite_interval(2.0, 2.0);
  ok = ok && endpoint.has_value() &&
       std::abs(endpoint->first - 0.25) <= 1e-14 &&
       std::abs(endpoint->second - 0.25) <= 1e-14;
  report(9, ok,
         "doubly finite region over " + std::to_string(count) +
             "-point lattice: nonempty iff alpha*beta >= 4, endpoint pinches to 1/beta^2");
}

// --------------------------------------------------------------- criterion 10
int run_cmd(const std::string& cmd) {
  const int rc = std::system((cmd + " >/dev/null 2>&1").c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion_cli(const std::string& bin) {
  if (bin.empty()) {
    report(10, false, "CLI contract: binary path not supplied");
    return;
  }
  const fs::path dir = fs::temp_directory_path() / "hardy_acceptance_cli";
  fs::remove_all(dir);
  fs::create_directories(dir);
  {
    std::ofstream ok(dir / "ok.cfg");
    ok << "data = gaussian\ngamma = 0.7\nalpha = 2\nbeta = 2\nT = 0.18\n"
          "t_start = 0\nt_end = 0.18\ndt = 0.018\n";
    std::ofstream bad(dir / "bad.cfg");
    bad << "no_such_key = 1\n";
    std::ofstream aliased(dir / "aliased.cfg");
    aliased << "data = gaussian\ngamma = 0.02\nN = 256\nL = 10\ntimes = 0.5\nmethod = all\n";
  }

  bool ok = true;
  ok = ok && run_cmd(bin + " lemma1 --config " + (dir / "ok.cfg").string() + " --out " +
                     (dir / "a").string()) == 0;
  ok = ok && run_cmd(bin + " lemma1 --config " + (dir / "ok.cfg").string() + " --out " +
                     (dir / "b").string()) == 0;
  bool identical = true;
  for (const auto& e : fs::directory_iterator(dir / "a"))
    identical = identical && slurp(e.path()) == slurp(dir / "b" / e.path().filename());
  ok = ok && identical;
  ok = ok && run_cmd(bin + " lemma1 --config " + (dir / "bad.cfg").string() + " --out " +
                     (dir / "c").string()) == 2;
  // unresolved box: cross-method agreement honestly fails its tolerance
  ok = ok && run_cmd(bin + " evolve --config " + (dir / "aliased.cfg").string() + " --out " +
                     (dir / "d").string()) == 1;
  report(10, ok, std::string("CLI determinism and exit-status contract (0/1/2): ") +
                     (identical ? "byte-identical reruns" : "rerun outputs differ"));
}

} // namespace

int main(int argc, char** argv) {
  const std::string bin = argc > 1 ? argv[1] : "";
  criterion_fourier();
  criterion_propagators();
  criterion_lemma1();
  criterion_interpolation_convexity();
  criterion_operators();
  criterion_log_convexity();
  criterion_phi();
  criterion_reductions();
  criterion_hardy_region();
  criterion_cli(bin);
  if (failed) {
    std::printf("%d criterion(s) failed\n", failed);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
