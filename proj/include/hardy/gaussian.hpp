#pragma once

#include <Eigen/Core>
#include <complex>

#include "hardy/field.hpp"
#include "hardy/grid.hpp"

namespace hardy {

// Exact algebra of c * exp(-a|x|^2 + b.x) with complex c, a and b.
// The quadratic coefficient is isotropic. Objects with Re a <= 0 are kept
// as formal data: evaluation works, norm and transform operations throw.
// All half-integer powers take the principal branch.
struct ComplexGaussian {
  int dim = 1;
  cplx amplitude{1.0, 0.0};               // c
  cplx quad{0.25, 0.0};                   // a
  Eigen::Vector2cd lin{cplx(0), cplx(0)}; // b, first dim entries used

  bool formal() const { return !(quad.real() > 0.0); }
};

ComplexGaussian make_gaussian(int dim, cplx amplitude, cplx quad);
ComplexGaussian make_gaussian(int dim, cplx amplitude, cplx quad,
                              const Eigen::Vector2cd& lin);

cplx gauss_value(const ComplexGaussian& g, double x);
cplx gauss_value(const ComplexGaussian& g, double x0, double x1);
SampledField gauss_eval(const ComplexGaussian& g, const Grid& grid);

ComplexGaussian gauss_product(const ComplexGaussian& g1, const ComplexGaussian& g2);
ComplexGaussian gauss_ratio(const ComplexGaussian& g1, const ComplexGaussian& g2);
ComplexGaussian gauss_conj(const ComplexGaussian& g);    // conj(g(x)) for real x
ComplexGaussian gauss_dilate(const ComplexGaussian& g, double s); // x -> g(s x)

// Unitary transforms (2pi)^{-n/2} int e^{-i xi.x} / e^{+i x.xi}; require Re a > 0.
ComplexGaussian gauss_fourier(const ComplexGaussian& g);
ComplexGaussian gauss_inverse_fourier(const ComplexGaussian& g);

// L2 norm via int exp(-2 Re(a) x^2 + 2 Re(b) x) dx per axis; requires Re a > 0.
double gauss_l2norm(const ComplexGaussian& g);

// Free evolution e^{it Laplacian}: a -> a/(1+4iat), b -> b/(1+4iat),
// c -> c (1+4iat)^{-n/2} exp(i t b.b/(1+4iat)). Requires Re a > 0, which keeps
// the principal branch continuous in t.
ComplexGaussian gauss_evolve(const ComplexGaussian& g, double t);

// G(x,t) = (t-i)^{-n/2} exp(-(1-it)|x|^2 / (4(t^2+1))), the free wave with
// modulus (1+t^2)^{-n/4} exp(-|x|^2/(4(1+t^2))). arg(t-i) lies in (-pi, 0).
ComplexGaussian gaussian_free_wave_oracle(double t, int dim);
SampledField gaussian_free_wave(double t, const Grid& grid);

} // namespace hardy
