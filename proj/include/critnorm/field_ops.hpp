#pragma once

#include <array>

#include "critnorm/multiplier.hpp"
#include "critnorm/transform.hpp"

namespace critnorm {

/// |x|^p with fast paths for the exponents the norm code hits in loops.
double pow_abs(double x, double p);

/// Zero every mode outside the 2/3 band (in place variant and value variant).
void dealias_inplace(SpectralField& f);
SpectralField dealias(const SpectralField& f);

/// Pointwise product in physical space, transformed back and dealiased.
SpectralField product(const SpectralField& a, const SpectralField& b);
SpectralField product(const PhysicalField& a, const PhysicalField& b);

std::array<SpectralField, 3> gradient(const SpectralField& f);

/// Trapezoidal (equal-weight) quadrature of point values times cell volume.
double integral(const PhysicalField& f);
/// Quadrature of a product of two point-value fields.
double integral_product(const PhysicalField& a, const PhysicalField& b);

/// L^p norm over the box by equal-weight quadrature; p = inf returns max|f|.
double lp_norm(const PhysicalField& f, double p);
double lp_norm(const SpectralField& f, double p);

/// Mixed norm L^p_h(L^q_v): the vertical (inner) axis first, then the
/// horizontal plane.  Either exponent may be infinite.
double mixed_lp_h_lq_v(const PhysicalField& f, double p, double q);

/// Signed fractional power a_alpha = sign(a) |a|^alpha (alpha in (0,1]),
/// evaluated pointwise and transformed back without truncation so grid
/// values are exact.
SpectralField signed_power(const SpectralField& f, double alpha);
PhysicalField signed_power(const PhysicalField& f, double alpha);

/// Regularized pointwise gradient of a_alpha:
///   alpha * (grad a) * (|a| + eps)^(alpha-1),  eps = 1e-30 + 1e-12 max|a|.
/// grad a is spectral; the power field itself is never differentiated
/// spectrally (it is not band-limited).
std::array<PhysicalField, 3> grad_signed_power(const SpectralField& f, double alpha);

/// integral |grad a_{3/4}|^2 dx evaluated through the identity
///   int |grad a|^2 |a|^{-1/2} = -2 int (lap a) a_{1/2},
/// whose right-hand integrand is continuous; the direct quadrature of the
/// left side loses O(sqrt(h)) accuracy near zero crossings of a.
double grad_signed_power34_sq_integral(const SpectralField& f);

/// Parseval sum: volume-weighted sum of |coeffs|^2 (equals lp_norm(f,2)^2).
double parseval_l2_sq(const SpectralField& f);

/// lambda-rescaling a_lambda(x) = lambda a(lambda x) realized by box/grid
/// co-refinement: same mode count on box L/lambda, coefficients
/// c'(lambda m) = lambda c(m).  Modes with |m| > n/(2 lambda) are not
/// representable after the shift; nonzero content there is an error.
SpectralField rescale_refine(const SpectralField& f, int lambda = 2);

} // namespace critnorm
