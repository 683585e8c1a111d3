#pragma once

#include "hardy/field.hpp"

namespace hardy {

// Unitary transform pair in the convention
//   F[h](xi) = (2pi)^{-n/2} int e^{-i xi.x} h(x) dx,
// realized as the exact quadrature sum over the cell-centered grid via an
// FFT plus the phase factors induced by the half-cell offset. The discrete
// pair is unitary between the dx^n and dxi^n quadrature norms and inverts
// exactly up to roundoff.
SpectralField forward_fourier(const SampledField& f);
SampledField inverse_fourier(const SpectralField& F);

// Quadrature transform of f at an arbitrary frequency (trigonometric
// interpolation of the spectrum).
cplx spectrum_at(const SampledField& f, double xi);
cplx spectrum_at(const SampledField& f, double xi0, double xi1);

// Band-limited evaluation of the field represented by F at an off-grid point.
cplx value_at(const SpectralField& F, double x);
cplx value_at(const SpectralField& F, double x0, double x1);

// d/dxi along one axis, exact on the band-limited interpolant.
SpectralField spectral_derivative(const SpectralField& F, int axis);

// Spectral Laplacian of a sampled field (multiplier -|xi|^2).
SampledField laplacian(const SampledField& f);

} // namespace hardy
