#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace critnorm {

/// Errors raised when inputs violate a documented precondition (bad shapes,
/// bad parameters, malformed specs).  The CLI maps these to exit code 2.
class ParameterError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Periodic box [0,L1]x[0,L2]x[0,L3] sampled on an n1 x n2 x n3 collocation
/// grid.  Spectral data is indexed in FFT order: axis index i maps to the
/// integer mode m = i for i <= n/2 and m = i - n otherwise, with wavenumber
/// k = 2*pi/L * m.  Each n_i must be even and >= 8.
class Grid {
  public:
    Grid(int n1, int n2, int n3, double L1, double L2, double L3)
        : n_{n1, n2, n3}, L_{L1, L2, L3} {
        for (int a = 0; a < 3; ++a) {
            if (n_[a] < 8 || n_[a] % 2 != 0)
                throw ParameterError("grid: modes per axis must be even and >= 8");
            if (!(L_[a] > 0.0))
                throw ParameterError("grid: box lengths must be positive");
        }
        for (int a = 0; a < 3; ++a) {
            k_[a].resize(n_[a]);
            kderiv_[a].resize(n_[a]);
            const double k0 = 2.0 * M_PI / L_[a];
            for (int i = 0; i < n_[a]; ++i) {
                const int m = (i <= n_[a] / 2) ? i : i - n_[a];
                k_[a][i] = k0 * m;
                // Odd (derivative) symbols vanish on the Nyquist plane so that
                // Hermitian symmetry survives multiplication by i*k.
                kderiv_[a][i] = (i == n_[a] / 2) ? 0.0 : k0 * m;
            }
        }
    }

    static std::shared_ptr<const Grid> make(int n, double L) {
        return std::make_shared<const Grid>(n, n, n, L, L, L);
    }
    static std::shared_ptr<const Grid> make(int n1, int n2, int n3, double L1, double L2,
                                            double L3) {
        return std::make_shared<const Grid>(n1, n2, n3, L1, L2, L3);
    }

    int n(int axis) const { return n_[axis]; }
    double L(int axis) const { return L_[axis]; }
    std::int64_t size() const {
        return std::int64_t(n_[0]) * n_[1] * n_[2];
    }
    double volume() const { return L_[0] * L_[1] * L_[2]; }
    double cell_volume() const { return volume() / double(size()); }
    double dx_min() const {
        return std::min({L_[0] / n_[0], L_[1] / n_[1], L_[2] / n_[2]});
    }

    std::int64_t index(int i1, int i2, int i3) const {
        return (std::int64_t(i1) * n_[1] + i2) * n_[2] + i3;
    }

    /// Wavenumber along an axis for spectral index i (Nyquist kept).
    double k(int axis, int i) const { return k_[axis][i]; }
    /// Wavenumber used by derivative symbols (zero on the Nyquist plane).
    double k_deriv(int axis, int i) const { return kderiv_[axis][i]; }

    double kh_sq(int i1, int i2) const {
        return k_[0][i1] * k_[0][i1] + k_[1][i2] * k_[1][i2];
    }
    double k_sq(int i1, int i2, int i3) const {
        return kh_sq(i1, i2) + k_[2][i3] * k_[2][i3];
    }

    /// Largest |k| on the lattice.
    double k_max() const {
        return std::sqrt(k_sq(n_[0] / 2, n_[1] / 2, n_[2] / 2));
    }
    /// Smallest positive |k| (radius of the first nonzero shell).
    double k_min_positive() const {
        double m = std::min({2.0 * M_PI / L_[0], 2.0 * M_PI / L_[1], 2.0 * M_PI / L_[2]});
        return m;
    }

    /// 2/3-rule predicate: true when the mode survives dealiasing.
    bool dealias_keep(int i1, int i2, int i3) const {
        auto keep = [this](int axis, int i) {
            const int m = (i <= n_[axis] / 2) ? i : i - n_[axis];
            return 3 * std::abs(m) <= n_[axis];
        };
        return keep(0, i1) && keep(1, i2) && keep(2, i3);
    }

    std::array<int, 3> conj_index(int i1, int i2, int i3) const {
        return {(n_[0] - i1) % n_[0], (n_[1] - i2) % n_[1], (n_[2] - i3) % n_[2]};
    }

    /// Physical collocation point of grid index (i1,i2,i3).
    std::array<double, 3> x(int i1, int i2, int i3) const {
        return {L_[0] * i1 / n_[0], L_[1] * i2 / n_[1], L_[2] * i3 / n_[2]};
    }

    bool same_shape(const Grid& o) const {
        return n_ == o.n_ && L_ == o.L_;
    }

  private:
    std::array<int, 3> n_;
    std::array<double, 3> L_;
    std::array<std::vector<double>, 3> k_;
    std::array<std::vector<double>, 3> kderiv_;
};

using GridPtr = std::shared_ptr<const Grid>;

inline void require_same_grid(const Grid& a, const Grid& b, const char* what) {
    if (!a.same_shape(b))
        throw ParameterError(std::string("grid mismatch in ") + what);
}

} // namespace critnorm
