#include "critnorm/littlewood_paley.hpp"

#include <cmath>
#include <vector>

namespace critnorm {

namespace {

const CutoffPair& cutoffs() {
    static const CutoffPair c = make_cutoffs();
    return c;
}

double min_positive_radius(const Grid& g, BlockMode mode) {
    const double k1 = 2.0 * M_PI / g.L(0);
    const double k2 = 2.0 * M_PI / g.L(1);
    const double k3 = 2.0 * M_PI / g.L(2);
    switch (mode) {
        case BlockMode::Iso: return std::min({k1, k2, k3});
        case BlockMode::Horizontal: return std::min(k1, k2);
        case BlockMode::Vertical: return k3;
    }
    return k1;
}

double max_radius(const Grid& g, BlockMode mode) {
    const double k1 = M_PI * g.n(0) / g.L(0);
    const double k2 = M_PI * g.n(1) / g.L(1);
    const double k3 = M_PI * g.n(2) / g.L(2);
    switch (mode) {
        case BlockMode::Iso: return std::sqrt(k1 * k1 + k2 * k2 + k3 * k3);
        case BlockMode::Horizontal: return std::sqrt(k1 * k1 + k2 * k2);
        case BlockMode::Vertical: return k3;
    }
    return k1;
}

} // namespace

BlockIndexRange block_range(const Grid& g, BlockMode mode) {
    const double rmin = min_positive_radius(g, mode);
    const double rmax = max_radius(g, mode);
    // Supp phi(2^-j .) = [3/4 2^j, 8/3 2^j]; retain j whose annulus meets
    // [rmin, rmax].
    BlockIndexRange r;
    r.j_min = int(std::ceil(std::log2(rmin * 3.0 / 8.0)));
    r.j_max = int(std::floor(std::log2(rmax * 4.0 / 3.0)));
    return r;
}

double block_radius(const Grid& g, BlockMode mode, int i1, int i2, int i3) {
    switch (mode) {
        case BlockMode::Iso: return std::sqrt(g.k_sq(i1, i2, i3));
        case BlockMode::Horizontal: return std::sqrt(g.kh_sq(i1, i2));
        case BlockMode::Vertical: return std::abs(g.k(2, i3));
    }
    return 0.0;
}

SpectralField dyadic_block(const SpectralField& f, BlockMode mode, int j, BlockKind kind) {
    const Grid& g = f.grid();
    const CutoffPair& c = cutoffs();
    const double scale = std::ldexp(1.0, -j);
    SpectralField out(f.grid_ptr());
    for (int i1 = 0; i1 < g.n(0); ++i1)
        for (int i2 = 0; i2 < g.n(1); ++i2)
            for (int i3 = 0; i3 < g.n(2); ++i3) {
                const double r = block_radius(g, mode, i1, i2, i3);
                if (r == 0.0) continue; // homogeneous convention
                const double w = (kind == BlockKind::Delta) ? c.phi(scale * r) : c.chi(scale * r);
                if (w != 0.0) {
                    const std::int64_t i = g.index(i1, i2, i3);
                    out.coeffs()[i] = w * f.coeffs()[i];
                }
            }
    return out;
}

SpectralField dyadic_block_hv(const SpectralField& f, int jh, int jv) {
    const Grid& g = f.grid();
    const CutoffPair& c = cutoffs();
    const double sh = std::ldexp(1.0, -jh);
    const double sv = std::ldexp(1.0, -jv);
    SpectralField out(f.grid_ptr());
    for (int i1 = 0; i1 < g.n(0); ++i1)
        for (int i2 = 0; i2 < g.n(1); ++i2) {
            const double rh = std::sqrt(g.kh_sq(i1, i2));
            if (rh == 0.0) continue;
            const double wh = c.phi(sh * rh);
            if (wh == 0.0) continue;
            for (int i3 = 0; i3 < g.n(2); ++i3) {
                const double rv = std::abs(g.k(2, i3));
                if (rv == 0.0) continue;
                const double wv = c.phi(sv * rv);
                if (wv != 0.0) {
                    const std::int64_t i = g.index(i1, i2, i3);
                    out.coeffs()[i] = wh * wv * f.coeffs()[i];
                }
            }
        }
    return out;
}

SpectralField reconstruct(const SpectralField& f, BlockMode mode) {
    const BlockIndexRange r = block_range(f.grid(), mode);
    SpectralField sum(f.grid_ptr());
    for (int j = r.j_min; j <= r.j_max; ++j) sum = sum + dyadic_block(f, mode, j);
    return sum;
}

SpectralField remove_zero_radius_modes(const SpectralField& f, BlockMode mode) {
    const Grid& g = f.grid();
    SpectralField out = f;
    for (int i1 = 0; i1 < g.n(0); ++i1)
        for (int i2 = 0; i2 < g.n(1); ++i2)
            for (int i3 = 0; i3 < g.n(2); ++i3)
                if (block_radius(g, mode, i1, i2, i3) == 0.0)
                    out.coeffs()[g.index(i1, i2, i3)] = 0.0;
    return out;
}

std::tuple<SpectralField, SpectralField, SpectralField> bony_decompose(const SpectralField& a,
                                                                       const SpectralField& b) {
    require_same_grid(a.grid(), b.grid(), "bony_decompose");
    const GridPtr grid = a.grid_ptr();
    const BlockIndexRange r = block_range(*grid, BlockMode::Iso);

    // Cache physical blocks; the low-pass used by the paraproducts keeps the
    // mean so constants land in T-bar rather than vanishing.
    std::vector<PhysicalField> da, db;
    for (int j = r.j_min; j <= r.j_max; ++j) {
        da.push_back(to_physical(dyadic_block(a, BlockMode::Iso, j)));
        db.push_back(to_physical(dyadic_block(b, BlockMode::Iso, j)));
    }
    auto low_with_mean = [&](const SpectralField& f, int j) {
        SpectralField s = dyadic_block(f, BlockMode::Iso, j, BlockKind::Low);
        s.coeffs()[0] = f.coeffs()[0];
        return to_physical(s);
    };

    SpectralField t_ab(grid), t_ba(grid), rem(grid);
    const int count = r.j_max - r.j_min + 1;
    for (int jj = 0; jj < count; ++jj) {
        const int j = r.j_min + jj;
        PhysicalField sa = low_with_mean(a, j - 1);
        PhysicalField sb = low_with_mean(b, j - 1);
        t_ab = t_ab + product(sa, db[jj]);
        t_ba = t_ba + product(sb, da[jj]);
        PhysicalField tilde(grid);
        for (int dj = -1; dj <= 1; ++dj)
            if (jj + dj >= 0 && jj + dj < count) tilde.values() += db[jj + dj].values();
        rem = rem + product(da[jj], tilde);
    }
    return {t_ab, t_ba, rem};
}

} // namespace critnorm
