#pragma once

#include <Eigen/Core>
#include <complex>

#include "critnorm/grid.hpp"

namespace critnorm {

using complexd = std::complex<double>;
using CoeffArray = Eigen::ArrayXcd;
using RealArray = Eigen::ArrayXd;

/// A real scalar field on the periodic grid, stored as complex Fourier
/// coefficients in FFT order (C row-major over (i1,i2,i3)).  Realness is
/// encoded as Hermitian symmetry coeffs(-k) = conj(coeffs(k)).
class SpectralField {
  public:
    SpectralField() = default;
    explicit SpectralField(GridPtr grid)
        : grid_(std::move(grid)), coeffs_(CoeffArray::Zero(grid_->size())) {}
    SpectralField(GridPtr grid, CoeffArray coeffs)
        : grid_(std::move(grid)), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != grid_->size())
            throw ParameterError("spectral field: coefficient count does not match grid");
    }

    const Grid& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }
    const CoeffArray& coeffs() const { return coeffs_; }
    CoeffArray& coeffs() { return coeffs_; }

    complexd operator()(int i1, int i2, int i3) const {
        return coeffs_[grid_->index(i1, i2, i3)];
    }
    complexd& at(int i1, int i2, int i3) {
        return coeffs_[grid_->index(i1, i2, i3)];
    }

    complexd mean_mode() const { return coeffs_[0]; }

    bool is_finite() const { return coeffs_.isFinite().all(); }

    /// Max deviation from Hermitian symmetry, relative to max |coeff|.
    double hermitian_defect() const;

    /// Project onto the Hermitian (real-field) part: averages conjugate
    /// pairs and zeroes the imaginary part of self-conjugate modes.
    void symmetrize();

    static SpectralField zero(GridPtr grid) { return SpectralField(std::move(grid)); }

  private:
    GridPtr grid_;
    CoeffArray coeffs_;
};

/// Point values of a real field on the collocation grid, same index order.
class PhysicalField {
  public:
    PhysicalField() = default;
    explicit PhysicalField(GridPtr grid)
        : grid_(std::move(grid)), values_(RealArray::Zero(grid_->size())) {}
    PhysicalField(GridPtr grid, RealArray values)
        : grid_(std::move(grid)), values_(std::move(values)) {
        if (values_.size() != grid_->size())
            throw ParameterError("physical field: value count does not match grid");
    }

    const Grid& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }
    const RealArray& values() const { return values_; }
    RealArray& values() { return values_; }

    double operator()(int i1, int i2, int i3) const {
        return values_[grid_->index(i1, i2, i3)];
    }
    double& at(int i1, int i2, int i3) { return values_[grid_->index(i1, i2, i3)]; }

  private:
    GridPtr grid_;
    RealArray values_;
};

inline SpectralField operator+(const SpectralField& a, const SpectralField& b) {
    require_same_grid(a.grid(), b.grid(), "operator+");
    return {a.grid_ptr(), a.coeffs() + b.coeffs()};
}
inline SpectralField operator-(const SpectralField& a, const SpectralField& b) {
    require_same_grid(a.grid(), b.grid(), "operator-");
    return {a.grid_ptr(), a.coeffs() - b.coeffs()};
}
inline SpectralField operator*(double s, const SpectralField& a) {
    return {a.grid_ptr(), s * a.coeffs()};
}
inline SpectralField operator*(const SpectralField& a, double s) { return s * a; }
inline SpectralField operator-(const SpectralField& a) {
    return {a.grid_ptr(), -a.coeffs()};
}

/// Largest |coefficient| (sup over modes, not over physical space).
inline double max_abs_coeff(const SpectralField& f) {
    return f.coeffs().size() ? f.coeffs().abs().maxCoeff() : 0.0;
}

} // namespace critnorm
