#pragma once

#include "critnorm/spectral_field.hpp"

namespace critnorm {

/// Forward transform: collocation values -> Fourier coefficients of
/// f(x) = sum_k c_k exp(i k.x).  Hermitian symmetry is enforced on output.
SpectralField to_spectral(const PhysicalField& f);

/// Inverse transform: coefficients -> point values (real part; the
/// imaginary residual of a Hermitian field is round-off).
PhysicalField to_physical(const SpectralField& f);

} // namespace critnorm
