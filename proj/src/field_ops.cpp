#include "critnorm/field_ops.hpp"

#include <cmath>
#include <limits>

namespace critnorm {

double pow_abs(double x, double p) {
    const double a = std::abs(x);
    if (p == 2.0) return a * a;
    if (p == 1.0) return a;
    if (p == 3.0) return a * a * a;
    if (p == 1.5) return a * std::sqrt(a);
    if (p == 4.0) return (a * a) * (a * a);
    return std::pow(a, p);
}

void dealias_inplace(SpectralField& f) {
    const Grid& g = f.grid();
    for (int i1 = 0; i1 < g.n(0); ++i1)
        for (int i2 = 0; i2 < g.n(1); ++i2)
            for (int i3 = 0; i3 < g.n(2); ++i3)
                if (!g.dealias_keep(i1, i2, i3)) f.coeffs()[g.index(i1, i2, i3)] = 0.0;
}

SpectralField dealias(const SpectralField& f) {
    SpectralField out = f;
    dealias_inplace(out);
    return out;
}

SpectralField product(const SpectralField& a, const SpectralField& b) {
    require_same_grid(a.grid(), b.grid(), "product");
    return product(to_physical(a), to_physical(b));
}

SpectralField product(const PhysicalField& a, const PhysicalField& b) {
    require_same_grid(a.grid(), b.grid(), "product");
    PhysicalField p(a.grid_ptr(), a.values() * b.values());
    SpectralField out = to_spectral(p);
    dealias_inplace(out);
    return out;
}

std::array<SpectralField, 3> gradient(const SpectralField& f) {
    return {derivative(f, 0), derivative(f, 1), derivative(f, 2)};
}

double integral(const PhysicalField& f) {
    return f.values().sum() * f.grid().cell_volume();
}

double integral_product(const PhysicalField& a, const PhysicalField& b) {
    require_same_grid(a.grid(), b.grid(), "integral_product");
    return (a.values() * b.values()).sum() * a.grid().cell_volume();
}

double lp_norm(const PhysicalField& f, double p) {
    if (std::isinf(p)) return f.values().abs().maxCoeff();
    if (p < 1.0) throw ParameterError("lp_norm: p must be >= 1 or inf");
    double s = 0.0;
    const double* v = f.values().data();
    const Eigen::Index n = f.values().size();
    for (Eigen::Index i = 0; i < n; ++i) s += pow_abs(v[i], p);
    return std::pow(s * f.grid().cell_volume(), 1.0 / p);
}

double lp_norm(const SpectralField& f, double p) { return lp_norm(to_physical(f), p); }

double mixed_lp_h_lq_v(const PhysicalField& f, double p, double q) {
    if ((!std::isinf(p) && p < 1.0) || (!std::isinf(q) && q < 1.0))
        throw ParameterError("mixed norm: exponents must be >= 1 or inf");
    const Grid& g = f.grid();
    const double dz = g.L(2) / g.n(2);
    const double dA = (g.L(0) / g.n(0)) * (g.L(1) / g.n(1));
    double acc_h = 0.0, max_h = 0.0;
    for (int i1 = 0; i1 < g.n(0); ++i1)
        for (int i2 = 0; i2 < g.n(1); ++i2) {
            double acc_v = 0.0, max_v = 0.0;
            for (int i3 = 0; i3 < g.n(2); ++i3) {
                const double av = std::abs(f(i1, i2, i3));
                if (std::isinf(q))
                    max_v = std::max(max_v, av);
                else
                    acc_v += pow_abs(av, q);
            }
            const double inner = std::isinf(q) ? max_v : std::pow(acc_v * dz, 1.0 / q);
            if (std::isinf(p))
                max_h = std::max(max_h, inner);
            else
                acc_h += pow_abs(inner, p);
        }
    return std::isinf(p) ? max_h : std::pow(acc_h * dA, 1.0 / p);
}

PhysicalField signed_power(const PhysicalField& f, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw ParameterError("signed_power: alpha must lie in (0,1]");
    PhysicalField out(f.grid_ptr());
    const auto& v = f.values();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double a = v[i];
        out.values()[i] = (a == 0.0) ? 0.0 : std::copysign(std::pow(std::abs(a), alpha), a);
    }
    return out;
}

SpectralField signed_power(const SpectralField& f, double alpha) {
    if (alpha == 1.0) return f;
    return to_spectral(signed_power(to_physical(f), alpha));
}

std::array<PhysicalField, 3> grad_signed_power(const SpectralField& f, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw ParameterError("grad_signed_power: alpha must lie in (0,1]");
    PhysicalField a = to_physical(f);
    const double eps = 1e-30 + 1e-12 * a.values().abs().maxCoeff();
    RealArray weight = alpha * (a.values().abs() + eps).pow(alpha - 1.0);
    std::array<PhysicalField, 3> out{PhysicalField(f.grid_ptr()), PhysicalField(f.grid_ptr()),
                                     PhysicalField(f.grid_ptr())};
    for (int ax = 0; ax < 3; ++ax) {
        PhysicalField da = to_physical(derivative(f, ax));
        out[ax].values() = da.values() * weight;
    }
    return out;
}

double grad_signed_power34_sq_integral(const SpectralField& f) {
    PhysicalField lap = to_physical(laplacian(f));
    PhysicalField half = signed_power(to_physical(f), 0.5);
    // |grad a_{3/4}|^2 = (9/16) |grad a|^2 |a|^{-1/2} and
    // int |grad a|^2 |a|^{-1/2} = -2 int (lap a) a_{1/2}.
    const double v = -(9.0 / 8.0) * integral_product(lap, half);
    return std::max(v, 0.0);
}

double parseval_l2_sq(const SpectralField& f) {
    return f.coeffs().abs2().sum() * f.grid().volume();
}

SpectralField rescale_refine(const SpectralField& f, int lambda) {
    if (lambda < 1) throw ParameterError("rescale_refine: lambda must be >= 1");
    const Grid& g = f.grid();
    // On the box L/lambda the expansion of lambda a(lambda x) keeps the same
    // integer mode indices; the box change scales every wavenumber by lambda
    // and only the amplitude picks up the factor lambda.
    GridPtr fine = Grid::make(g.n(0), g.n(1), g.n(2), g.L(0) / lambda, g.L(1) / lambda,
                              g.L(2) / lambda);
    return {fine, double(lambda) * f.coeffs()};
}

} // namespace critnorm
