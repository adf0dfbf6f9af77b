#pragma once

#include <tuple>

#include "critnorm/cutoffs.hpp"
#include "critnorm/field_ops.hpp"

namespace critnorm {

/// Which frequency magnitude a dyadic block localizes.
enum class BlockMode { Iso, Horizontal, Vertical };

/// Delta_j (annulus, profile phi) or S_j (low-pass, profile chi).  S blocks
/// follow the homogeneous convention and drop the zero mode of their radius
/// (k = 0, k_h = 0 or k3 = 0 per mode).
enum class BlockKind { Delta, Low };

/// Dyadic indices whose annuli intersect the lattice radii of a grid;
/// blocks outside this range are identically zero there.
struct BlockIndexRange {
    int j_min = 0;
    int j_max = -1;
    bool empty() const { return j_max < j_min; }
};

BlockIndexRange block_range(const Grid& g, BlockMode mode);

/// Radius the mode localizes: |k|, |k_h| or |k3|.
double block_radius(const Grid& g, BlockMode mode, int i1, int i2, int i3);

/// Multiply coefficients by phi(2^-j r) (Delta) or chi(2^-j r) (Low).
/// Out-of-range j yields an exact zero (Delta) or full low-/high-pass (Low);
/// this is documented behavior, not an error.
SpectralField dyadic_block(const SpectralField& f, BlockMode mode, int j,
                           BlockKind kind = BlockKind::Delta);

/// Delta^h_k Delta^v_l f in one coefficient pass.
SpectralField dyadic_block_hv(const SpectralField& f, int jh, int jv);

/// Sum of all retained Delta_j; equals f minus its zero-radius modes.
SpectralField reconstruct(const SpectralField& f, BlockMode mode);

/// f with the zero-radius modes of the given localization removed
/// (k = 0 mode for Iso, the k_h = 0 line for Horizontal, k3 = 0 plane for
/// Vertical).  Reference value for the reconstruction identity.
SpectralField remove_zero_radius_modes(const SpectralField& f, BlockMode mode);

/// Bony paraproduct split of ab into (T(a,b), T(b,a), R(a,b)) with
///   T(a,b) = sum_j S^{in}_{j-1} a . Delta_j b,
///   R(a,b) = sum_j Delta_j a . (Delta_{j-1}+Delta_j+Delta_{j+1}) b,
/// every product dealiased.  S^{in} here keeps the mean so the three parts
/// sum to dealias(a b) - mean(a) mean(b).
std::tuple<SpectralField, SpectralField, SpectralField>
bony_decompose(const SpectralField& a, const SpectralField& b);

} // namespace critnorm
