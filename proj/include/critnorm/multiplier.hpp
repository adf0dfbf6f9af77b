#pragma once

#include <string>
#include <vector>

#include "critnorm/spectral_field.hpp"

namespace critnorm {

/// One factor of a Fourier-multiplier symbol.  Symbols are either real and
/// even or purely imaginary and odd in k, so any product of factors
/// preserves Hermitian symmetry.  Singular factors carry an explicit
/// zero-mode rule: inverses and negative powers are set to zero on the set
/// where they are undefined (k = 0, the k_h = 0 line, or the k3 = 0 plane).
struct MultiplierFactor {
    enum class Kind {
        AbsK,       // |k|^s      (s != 0; zero at k = 0)
        AbsKh,      // |k_h|^s    (zero on k_h = 0)
        AbsK3,      // |k3|^s     (zero on k3 = 0)
        Partial,    // i k_axis   (zero on the axis Nyquist plane)
        InvLap,     // -1/|k|^2   (zero at k = 0)
        InvLapH,    // -1/|k_h|^2 (zero on k_h = 0)
        D33InvLap,  // k3^2/|k|^2 (zero at k = 0; bounded symbol)
        HeatKernel, // exp(-t |k|^2)
    };
    Kind kind;
    double s = 0.0; // exponent for AbsK*/|.|^s kinds, time for HeatKernel
    int axis = 0;   // for Partial
};

/// Product of factors applied coefficientwise; the declarative value type
/// for every multiplier operator in the toolkit.
class MultiplierSpec {
  public:
    MultiplierSpec() = default;
    explicit MultiplierSpec(MultiplierFactor f) : factors_{f} {}

    MultiplierSpec& then(MultiplierFactor f) {
        factors_.push_back(f);
        return *this;
    }
    MultiplierSpec then(const MultiplierSpec& other) const {
        MultiplierSpec out = *this;
        out.factors_.insert(out.factors_.end(), other.factors_.begin(), other.factors_.end());
        return out;
    }

    const std::vector<MultiplierFactor>& factors() const { return factors_; }

    complexd eval(const Grid& g, int i1, int i2, int i3) const;

    static MultiplierSpec abs_k(double s) { return MultiplierSpec({MultiplierFactor::Kind::AbsK, s, 0}); }
    static MultiplierSpec abs_kh(double s) { return MultiplierSpec({MultiplierFactor::Kind::AbsKh, s, 0}); }
    static MultiplierSpec abs_k3(double s) { return MultiplierSpec({MultiplierFactor::Kind::AbsK3, s, 0}); }
    static MultiplierSpec partial(int axis) { return MultiplierSpec({MultiplierFactor::Kind::Partial, 0.0, axis}); }
    static MultiplierSpec inv_laplacian() { return MultiplierSpec({MultiplierFactor::Kind::InvLap, 0.0, 0}); }
    static MultiplierSpec inv_laplacian_h() { return MultiplierSpec({MultiplierFactor::Kind::InvLapH, 0.0, 0}); }
    static MultiplierSpec d33_inv_laplacian() { return MultiplierSpec({MultiplierFactor::Kind::D33InvLap, 0.0, 0}); }
    static MultiplierSpec heat(double t) { return MultiplierSpec({MultiplierFactor::Kind::HeatKernel, t, 0}); }

  private:
    std::vector<MultiplierFactor> factors_;
};

/// coeffs(k) *= m(k) pointwise.
SpectralField apply_multiplier(const SpectralField& f, const MultiplierSpec& m);

SpectralField derivative(const SpectralField& f, int axis);
SpectralField laplacian(const SpectralField& f);

} // namespace critnorm
