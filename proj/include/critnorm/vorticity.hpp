#pragma once

#include "critnorm/velocity.hpp"

namespace critnorm {

class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Vorticity Omega = curl v together with the two scalar unknowns of the
/// two-component reformulation: omega_h = d1 v2 - d2 v1 (the third Omega
/// component) and d3v3 = -d1 v1 - d2 v2.
struct VorticityState {
    std::array<SpectralField, 3> Omega;
    SpectralField omega_h;
    SpectralField d3v3;
    double time = 0.0;
};

/// Horizontal Biot-Savart split of v^h:
///   v_curl = grad_h^perp lap_h^{-1} omega   (horizontally divergence-free)
///   v_div  = -grad_h lap_h^{-1} d3 v3       (horizontally curl-free)
/// plus the k_h = 0 part of v^h, which lap_h^{-1} cannot represent and
/// which is returned explicitly instead of silently dropped.
struct HorizontalSplit {
    std::array<SpectralField, 2> v_curl;
    std::array<SpectralField, 2> v_div;
    std::array<SpectralField, 2> shear_residual;
};

std::array<SpectralField, 3> curl(const std::array<SpectralField, 3>& w);

VorticityState compute_vorticity(const VelocityState& v);

HorizontalSplit horizontal_split(const VelocityState& v);

/// Spectral Biot-Savart inversion v = i (k x Omega)/|k|^2; requires
/// div Omega = 0 to tolerance, returns the mean-zero divergence-free v with
/// curl v = Omega on k != 0 modes.
VelocityState velocity_from_vorticity(const std::array<SpectralField, 3>& Omega,
                                      double time = 0.0, double tol = 1e-8);

} // namespace critnorm
