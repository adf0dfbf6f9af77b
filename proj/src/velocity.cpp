#include "critnorm/velocity.hpp"

namespace critnorm {

double VelocityState::divergence_max() const {
    const Grid& g = grid();
    double worst = 0.0;
    for (int i1 = 0; i1 < g.n(0); ++i1)
        for (int i2 = 0; i2 < g.n(1); ++i2)
            for (int i3 = 0; i3 < g.n(2); ++i3) {
                const std::int64_t i = g.index(i1, i2, i3);
                const complexd d = g.k_deriv(0, i1) * v[0].coeffs()[i] +
                                   g.k_deriv(1, i2) * v[1].coeffs()[i] +
                                   g.k_deriv(2, i3) * v[2].coeffs()[i];
                worst = std::max(worst, std::abs(d));
            }
    return worst;
}

double VelocityState::divergence_scale() const {
    const Grid& g = grid();
    double worst = 0.0;
    for (int i1 = 0; i1 < g.n(0); ++i1)
        for (int i2 = 0; i2 < g.n(1); ++i2)
            for (int i3 = 0; i3 < g.n(2); ++i3) {
                const std::int64_t i = g.index(i1, i2, i3);
                const double kk = std::sqrt(g.k_sq(i1, i2, i3));
                const double vv = std::max({std::abs(v[0].coeffs()[i]), std::abs(v[1].coeffs()[i]),
                                            std::abs(v[2].coeffs()[i])});
                worst = std::max(worst, kk * vv);
            }
    return worst;
}

bool VelocityState::is_divergence_free(double tol) const {
    const double scale = divergence_scale();
    return divergence_max() <= tol * (scale > 0.0 ? scale : 1.0);
}

VelocityState leray_project(const std::array<SpectralField, 3>& w, double time) {
    require_same_grid(w[0].grid(), w[1].grid(), "leray_project");
    require_same_grid(w[0].grid(), w[2].grid(), "leray_project");
    const Grid& g = w[0].grid();
    VelocityState out(w[0].grid_ptr(), time);
    for (int i1 = 0; i1 < g.n(0); ++i1)
        for (int i2 = 0; i2 < g.n(1); ++i2)
            for (int i3 = 0; i3 < g.n(2); ++i3) {
                const std::int64_t i = g.index(i1, i2, i3);
                const double k[3] = {g.k_deriv(0, i1), g.k_deriv(1, i2), g.k_deriv(2, i3)};
                const double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
                const complexd wi[3] = {w[0].coeffs()[i], w[1].coeffs()[i], w[2].coeffs()[i]};
                if (k2 == 0.0) {
                    for (int a = 0; a < 3; ++a) out.v[a].coeffs()[i] = wi[a];
                    continue;
                }
                const complexd kw = (k[0] * wi[0] + k[1] * wi[1] + k[2] * wi[2]) / k2;
                for (int a = 0; a < 3; ++a) out.v[a].coeffs()[i] = wi[a] - k[a] * kw;
            }
    return out;
}

VelocityState leray_project(const VelocityState& w) { return leray_project(w.v, w.time); }

SpectralField divergence(const std::array<SpectralField, 3>& w) {
    return derivative(w[0], 0) + derivative(w[1], 1) + derivative(w[2], 2);
}

SpectralField dot_component(const VelocityState& v, const std::array<double, 3>& e) {
    return {v.grid_ptr(), e[0] * v.v[0].coeffs() + e[1] * v.v[1].coeffs() + e[2] * v.v[2].coeffs()};
}

VelocityState rescale_refine(const VelocityState& v, int lambda) {
    return VelocityState({rescale_refine(v.v[0], lambda), rescale_refine(v.v[1], lambda),
                          rescale_refine(v.v[2], lambda)},
                         v.time / (double(lambda) * lambda));
}

} // namespace critnorm
