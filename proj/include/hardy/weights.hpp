#pragma once

#include <vector>

#include "hardy/field.hpp"

namespace hardy {

// Parameters of the two-time Gaussian decay interpolation. Admissible when
// T/(alpha beta) <= 1/4; R is the smaller root of 2T R^2 - alpha beta R + 2T = 0
// and lies in (0, 1].
struct WeightSpec {
  double alpha = 2;
  double beta = 2;
  double T = 1;
  double R = 1; // derived
};

WeightSpec make_weight_spec(double alpha, double beta, double T);

// R = (alpha beta - sqrt(alpha^2 beta^2 - 16 T^2)) / (4T); exact at the
// endpoint where the discriminant vanishes.
double smallest_root_R(double alpha, double beta, double T);

// a(t) = alpha beta R T / (2(alpha t + beta(T-t))^2 + 2 R^2 (alpha t - beta(T-t))^2);
// a(0) = 1/beta^2 and a(T) = 1/alpha^2.
double decay_rate_a(double t, const WeightSpec& w);

// True iff |alpha - beta| < R^2 (alpha + beta), i.e. 1/a attains its minimum
// strictly inside (0, T).
bool interior_min_condition(const WeightSpec& w);

// || e^{gamma |x|^2} f ||_2 by log-domain quadrature. Throws when the weighted
// integrand has unresolved tails on the grid.
double weighted_l2_norm(const SampledField& f, double gamma);

struct Lemma1Report {
  WeightSpec weight;
  std::vector<double> times;
  std::vector<double> lhs; // ||e^{a(t)|x|^2} u(t)||
  double rhs = 0;          // ||e^{|x|^2/beta^2} u(0)|| + ||e^{|x|^2/alpha^2} u(T)||
  double min_margin = 0;   // min over times of rhs - lhs
};

// Evolves h with the spectral propagator and checks the decay interpolation
// sup_t ||e^{a(t)|x|^2} u(t)|| <= ||e^{|x|^2/beta^2} u(0)|| + ||e^{|x|^2/alpha^2} u(T)||.
Lemma1Report check_lemma1(const SampledField& h, const WeightSpec& w,
                          const std::vector<double>& times);

struct DecayProfile {
  double rate = 0;      // coefficient of -|x|^2 in log-modulus
  double amplitude = 0;
  double residual = 0;  // rms residual of the fit
};

// Least-squares fit of log|f| against -|x|^2 over samples above the relative
// floor 1e-12; needs at least 16 such samples.
DecayProfile fit_gaussian_decay(const SampledField& f);

} // namespace hardy
