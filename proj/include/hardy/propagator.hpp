#pragma once

#include <functional>

#include "hardy/field.hpp"
#include "hardy/gaussian.hpp"

namespace hardy {

enum class EvolveMethod { spectral, convolution, pseudoconformal, oracle };

const char* to_string(EvolveMethod m);

struct EvolvedWave {
  double time = 0;
  EvolveMethod method = EvolveMethod::spectral;
  SampledField field;
};

inline constexpr double kDefaultTMin = 1e-3;

// Fourier multiplier e^{-i|xi|^2 t}; exact group law on the discrete grid.
EvolvedWave evolve_spectral(const SampledField& h, double t);

// Direct quadrature of (4 pi i t)^{-n/2} int e^{i|x-y|^2/(4t)} h(y) dy,
// O(N^2) per point set; cross-check only. |t| >= t_min.
EvolvedWave evolve_convolution(const SampledField& h, double t, double t_min = kDefaultTMin);

// u(x,t) = (2|t|)^{-n/2} e^{-i pi n sgn(t)/4} e^{i|x|^2/4t}
//          F[e^{i|.|^2/4t} h](x/2t),
// with band-limited evaluation of the transform at the rescaled points,
// which must lie inside the dual grid span.
EvolvedWave evolve_pseudoconformal(const SampledField& h, double t, double t_min = kDefaultTMin);

// v(x,t) = (it)^{-n/2} e^{i|x|^2/4t} conj(u)(x/t, 1/t - 1) for 0 < t <= 1,
// evaluated on target_grid; the rescaled points x/t must lie inside the
// domain of the source fields. u_at supplies u at the transported time.
SampledField v_transform(const std::function<SampledField(double)>& u_at, double t,
                         const Grid& target_grid, double t_min = kDefaultTMin);

// Closed-form composition of the same transform for Gaussian data under the
// free flow with u(0) = h; test oracle for v_transform.
ComplexGaussian v_transform_oracle(const ComplexGaussian& h, double t);

} // namespace hardy
