#pragma once

#include <utility>
#include <vector>

#include "hardy/field.hpp"
#include "hardy/gaussian.hpp"

namespace hardy {

// Frequency-side slices phi(xi, t) on the dual grid of `grid`, one column per
// time. Times are strictly increasing and, when there are at least two,
// uniformly spaced (finite differences in t rely on it).
struct SpaceTimeField {
  Grid grid;
  Eigen::ArrayXd times;
  Eigen::MatrixXcd values; // rows: grid points, cols: times

  int dim() const { return grid.dim; }
  double dt() const { return times.size() > 1 ? times[1] - times[0] : 0.0; }
};

SpaceTimeField make_space_time_field(const Grid& g, Eigen::ArrayXd times,
                                     Eigen::MatrixXcd values);

// phi(.,t) = F[u(.,t) / G(.,t)] for the supplied wave slices. A slice is
// rejected (listed in the error) when the quotient has not decayed at the
// edge of the representable region, i.e. the transported L2 hypothesis fails
// numerically at that time.
SpaceTimeField phi_from_wave_fields(const std::vector<SampledField>& u_slices,
                                    const std::vector<double>& times);

// Wave slices from the spectral propagator, far-tail roundoff floored.
SpaceTimeField phi_from_wave(const SampledField& h, const std::vector<double>& times);

// Wave slices sampled from the closed-form evolution of a Gaussian datum;
// exact down to the underflow of the samples.
SpaceTimeField phi_from_gaussian_wave(const ComplexGaussian& h, const Grid& grid,
                                      const std::vector<double>& times);

// Times whose quotient slice passes the admissibility check (non-throwing).
std::vector<double> phi_admissible_times(const SampledField& h,
                                         const std::vector<double>& times);

// max over interior slices of
//   || d_t phi - xi/(t-i).grad phi - n/(t-i) phi + i|xi|^2 phi || / ||phi||,
// central differences in t, spectral differentiation in xi.
double phi_equation_residual(const SpaceTimeField& phi);

// Pointwise multiplication by exp(lambda.xi - |xi|^2 (1+t^2)/2) per slice;
// rejects slices whose weighted values are not boundary-admissible.
SpaceTimeField f_lambda(const SpaceTimeField& phi, const Eigen::Vector2d& lambda);

// Symmetric / skew-symmetric splitting of the transport operator and the
// explicit time derivative of S:
//   S   =  i/(1+t^2) (xi.grad + n/2) - t lambda.xi/(1+t^2) + n t/(2(1+t^2))
//   A   =  t/(1+t^2) (xi.grad + n/2) - i lambda.xi/(1+t^2) + i n/(2(1+t^2))
//   S_t = -2it/(1+t^2)^2 (xi.grad + n/2) - (1-t^2) lambda.xi/(1+t^2)^2
//         + n(1-t^2)/(2(1+t^2)^2)
SpaceTimeField apply_S(const SpaceTimeField& f, const Eigen::Vector2d& lambda);
SpaceTimeField apply_A(const SpaceTimeField& f, const Eigen::Vector2d& lambda);
SpaceTimeField apply_S_t(const SpaceTimeField& f, const Eigen::Vector2d& lambda);

// residual1: [S,A] = lambda.xi/(1+t^2)
// residual2: (1+t^2) S_t + (1+t^2)[S,A] + 2t S = n/2
// both as max over slices of the relative L2 defect, nested spectral
// applications throughout.
std::pair<double, double> commutator_identity_residuals(const SpaceTimeField& f,
                                                        const Eigen::Vector2d& lambda);

// Time series H(t) = ||f(t)||^2 with the regularization epsilon.
struct ConvexityTrace {
  Eigen::ArrayXd times;
  Eigen::ArrayXd H;
  double epsilon = 1e-6;
  int dim = 1;
};

ConvexityTrace make_convexity_trace(Eigen::ArrayXd times, Eigen::ArrayXd H, double epsilon,
                                    int dim);
ConvexityTrace trace_of(const SpaceTimeField& f, double epsilon);

// Streaming trace of || e^{lambda xi - |xi|^2(1+t^2)/2} F[u/G] ||^2 for a
// Gaussian datum under the closed-form flow (memory O(N), 1D).
ConvexityTrace gaussian_trace(const ComplexGaussian& h, const Grid& grid,
                              const std::vector<double>& times, double lambda, double epsilon);

// Interior values of d_t((1+t^2) d_t log(H + eps)) - n by second-order
// differences; the minimum is >= 0 up to discretization for traces of exact
// solutions.
Eigen::ArrayXd log_convexity_defect_series(const ConvexityTrace& trace);
double log_convexity_defect(const ConvexityTrace& trace);

// theta(t,T) = (arctan T - arctan t) / (2 arctan T).
double theta_weight(double t, double T);

// Resamples K(s) = log((H+eps)/(1+t^2)^{n/2}) on a uniform grid in
// s = arctan t (clamped cubic spline) and returns the minimum raw second
// difference; >= 0 is the three-point log-convexity bound.
double arctan_convexity_check(const ConvexityTrace& trace);

struct SweepRow {
  double lambda = 0;
  double ratio = 0;
  double window_lo = 0;
  double window_hi = 0;
  bool admissible = true;
};

// ratio(lambda) = sup_t [||f_lambda(t)||^2/(1+t^2)^{n/2}]
//               / [e^{|lambda|^2/(1+T^2)} sup_t ||phi(t)||^2/(1+t^2)^{n/2}],
// over |t| <= T; log-convexity of the weighted mass forces ratio <= 1.
std::vector<SweepRow> theorem3_sweep(const SpaceTimeField& phi,
                                     const std::vector<double>& lambdas, double T);

} // namespace hardy
