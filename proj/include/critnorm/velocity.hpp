#pragma once

#include <array>

#include "critnorm/field_ops.hpp"

namespace critnorm {

/// Divergence-free velocity v = (v1, v2, v3) at one instant.
struct VelocityState {
    std::array<SpectralField, 3> v;
    double time = 0.0;

    VelocityState() = default;
    explicit VelocityState(GridPtr grid, double t = 0.0)
        : v{SpectralField(grid), SpectralField(grid), SpectralField(grid)}, time(t) {}
    VelocityState(std::array<SpectralField, 3> fields, double t)
        : v(std::move(fields)), time(t) {
        require_same_grid(v[0].grid(), v[1].grid(), "velocity");
        require_same_grid(v[0].grid(), v[2].grid(), "velocity");
    }

    const Grid& grid() const { return v[0].grid(); }
    const GridPtr& grid_ptr() const { return v[0].grid_ptr(); }

    bool is_finite() const {
        return v[0].is_finite() && v[1].is_finite() && v[2].is_finite();
    }

    /// max_k |sum_i k_i v_i(k)| over the lattice.
    double divergence_max() const;
    /// Normalization for the divergence test: max_k |k| |v(k)|.
    double divergence_scale() const;
    /// True when divergence_max() <= tol * divergence_scale().
    bool is_divergence_free(double tol = 1e-12) const;
};

/// Orthogonal projection onto divergence-free fields,
/// (P w)_i = w_i - k_i (k . w)/|k|^2; the k = 0 mode is left untouched.
VelocityState leray_project(const std::array<SpectralField, 3>& w, double time = 0.0);
VelocityState leray_project(const VelocityState& w);

SpectralField divergence(const std::array<SpectralField, 3>& w);

/// Component of v along a unit vector e (scalar field e . v).
SpectralField dot_component(const VelocityState& v, const std::array<double, 3>& e);

/// v_lambda(x) = lambda v(lambda x) by box/grid co-refinement; the caller
/// rescales time separately (t -> t / lambda^2).
VelocityState rescale_refine(const VelocityState& v, int lambda = 2);

} // namespace critnorm
