#pragma once

#include "critnorm/littlewood_paley.hpp"
#include "critnorm/norm_spec.hpp"
#include "critnorm/velocity.hpp"

namespace critnorm {

/// Evaluates any NormSpec on a scalar field.
///
/// Conventions on the finite lattice:
///  - Besov families sum weighted block L^p norms over the retained
///    BlockIndexRange; ell^inf outer norms are a max over retained indices.
///  - AnisoBesov sums vertical-inside-horizontal exactly in that order.
///  - SobolevAniso / HTheta are direct volume-weighted coefficient sums
///    excluding the k_h = 0 and k3 = 0 modes; SobolevIso excludes k = 0.
///  - HeatBesov takes the max of t^{sigma/2} ||e^{t lap} f||_inf over
///    t = 2^{-2m}, m = -2 .. ceil(log2 k_max) + 2, k = 0 mode dropped.
double norm(const SpectralField& f, const NormSpec& spec);

/// Vector-field norm: Lebesgue uses the pointwise Euclidean magnitude;
/// quadratic coefficient families sum the weights over components; block
/// and heat families combine per-component norms in ell^2.
double norm(const VelocityState& v, const NormSpec& spec);

/// Weighted H^{s,s'} coefficient pairing (a|b) with weight
/// |k_h|^{2s} |k3|^{2s'}, zero-radius modes excluded; the H_theta inner
/// product used by the Q-term budgets is the case (s,s') = (-1/2+theta, -theta).
double sobolev_aniso_pairing(const SpectralField& a, const SpectralField& b, double s, double sp);

inline double htheta_pairing(const SpectralField& a, const SpectralField& b, double theta) {
    return sobolev_aniso_pairing(a, b, -0.5 + theta, -theta);
}

/// ||grad f|| in the quadratic family of spec (SobolevAniso/HTheta/SobolevIso):
/// sqrt(sum_i ||d_i f||^2).
double grad_norm(const SpectralField& f, const NormSpec& spec);

} // namespace critnorm
