#pragma once

#include <optional>
#include <vector>

#include "hardy/field.hpp"

namespace hardy {

// T h = (h - h(0) e^{-x^2/4}) / x, h(0) by band-limited interpolation.
// Lowers polynomial degree against the Gaussian profile: for h = p(x)
// e^{-x^2/4} with deg p = k, T^k h is a multiple of e^{-x^2/4} and
// T^{k+1} h = 0.
SampledField reduce_T(const SampledField& h);
SampledField iterate_T(const SampledField& h, int k);

// (sgn * ghat)(xi) = 2 int_{eta < xi} ghat(eta) d eta when the total mass of
// ghat vanishes; relates to the transform of g/x by
// F[g/x] = (-i/2) (sgn * ghat).
SpectralField sign_convolution(const SpectralField& ghat);

// h_eta(x) = (2pi)^{-1/2} int e^{-i y eta} h(x, y) dy, a 1D slice of a 2D
// field; F[h_eta](xi) = hhat(xi, eta).
SampledField slice_transform(const SampledField& h, double eta);

// Psi = e^{-|.|^2/4} (e^{-|.|^2/2} * Phi) by quadrature convolution.
SampledField smooth_Psi(const SampledField& phi);

// residual1: e^{x^2/2} Psi(x)        = (e^{-|.|^2}  * Y1)(x/2),   Y1 = e^{|.|^2/2} Phi
// residual2: e^{xi^2/2} Psihat(xi)   = sqrt(2) (e^{-2|.|^2} * Y2)(xi/2),
//            Y2 = e^{|.|^2/2} Phihat
// (the sqrt(2) comes from the unitary transform normalization). Returned as
// relative sup errors over the central half of each domain.
std::pair<double, double> psi_identity_residuals(const SampledField& phi);

enum class HardyRegime { subcritical, endpoint, supercritical };
enum class HardyClass { consistent_only_with_zero, consistent_with_gaussian_line, unconstrained };

const char* to_string(HardyRegime r);
const char* to_string(HardyClass c);

struct WeightedSup {
  double value = 0;
  bool resolved = false; // false: profile still growing where the data end
};

struct HardyVerdict {
  double alpha = 0;
  double beta = 0;
  WeightedSup sup_x;  // sup_x  e^{|x|^2/beta^2} |h|
  WeightedSup sup_xi; // sup_xi e^{4|xi|^2/alpha^2} |hhat|
  HardyRegime regime = HardyRegime::endpoint;
  HardyClass classification = HardyClass::unconstrained;
};

// Weighted sup bounds with a tri-state outcome: a numeric run cannot certify
// an infinite bound, only report that the weighted profile was still growing
// where the resolved samples end.
HardyVerdict hardy_certificate(const SampledField& h, double alpha, double beta);

struct ScanRow {
  double gamma = 0;
  bool x_side_finite = false;
  bool xi_side_finite = false;
};

// Analytic finiteness of sup e^{|x|^2/beta^2} e^{-gamma x^2} and of the
// transform side, evaluated through the Gaussian oracle. The doubly finite
// set is [1/beta^2, alpha^2/16], nonempty iff alpha beta >= 4.
std::vector<ScanRow> gaussian_family_scan(const std::vector<double>& gammas, double alpha,
                                          double beta);
std::optional<std::pair<double, double>> doubly_finite_interval(double alpha, double beta);

struct BeurlingReport {
  double cutoff = 0;
  double value = 0;       // truncated integral at the cutoff
  double value_half = 0;  // same at cutoff/2, to make growth visible
  double log_value = 0;
  double log_value_half = 0;
  bool diverging = false; // log-domain value beyond double range
  double growth_ratio = 0;
};

// Truncated double integral of |h(x)| |hhat(xi)| e^{|x xi|} over
// |x|,|xi| <= cutoff in log-domain quadrature; samples below the
// double-precision floor of either factor are excluded.
BeurlingReport beurling_integral(const SampledField& h, double cutoff);

} // namespace hardy
