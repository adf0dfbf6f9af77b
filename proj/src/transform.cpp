#include "critnorm/transform.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace critnorm {

namespace {

struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

// FFTW planning is not thread-safe; execution with the new-array interface
// is.  Plans are cached per grid shape for the process lifetime and created
// with FFTW_ESTIMATE so planning is deterministic and does not touch the
// buffers.
PlanPair& plans_for(const Grid& g) {
    static std::mutex mu;
    static std::map<std::array<int, 3>, PlanPair> cache;
    std::array<int, 3> key{g.n(0), g.n(1), g.n(2)};
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const std::int64_t n = g.size();
    fftw_complex* a = fftw_alloc_complex(n);
    fftw_complex* b = fftw_alloc_complex(n);
    PlanPair p;
    p.fwd = fftw_plan_dft_3d(g.n(0), g.n(1), g.n(2), a, b, FFTW_FORWARD, FFTW_ESTIMATE);
    p.bwd = fftw_plan_dft_3d(g.n(0), g.n(1), g.n(2), a, b, FFTW_BACKWARD, FFTW_ESTIMATE);
    fftw_free(a);
    fftw_free(b);
    return cache.emplace(key, p).first->second;
}

struct Workspace {
    fftw_complex* in = nullptr;
    fftw_complex* out = nullptr;
    std::int64_t cap = 0;
    ~Workspace() {
        if (in) fftw_free(in);
        if (out) fftw_free(out);
    }
    void ensure(std::int64_t n) {
        if (cap >= n) return;
        if (in) fftw_free(in);
        if (out) fftw_free(out);
        in = fftw_alloc_complex(n);
        out = fftw_alloc_complex(n);
        cap = n;
    }
};

Workspace& workspace() {
    thread_local Workspace ws;
    return ws;
}

} // namespace

SpectralField to_spectral(const PhysicalField& f) {
    const Grid& g = f.grid();
    const std::int64_t n = g.size();
    auto& ws = workspace();
    ws.ensure(n);
    for (std::int64_t i = 0; i < n; ++i) {
        ws.in[i][0] = f.values()[i];
        ws.in[i][1] = 0.0;
    }
    fftw_execute_dft(plans_for(g).fwd, ws.in, ws.out);
    SpectralField out(f.grid_ptr());
    const double scale = 1.0 / double(n);
    for (std::int64_t i = 0; i < n; ++i)
        out.coeffs()[i] = complexd(ws.out[i][0], ws.out[i][1]) * scale;
    out.symmetrize();
    return out;
}

PhysicalField to_physical(const SpectralField& f) {
    const Grid& g = f.grid();
    const std::int64_t n = g.size();
    auto& ws = workspace();
    ws.ensure(n);
    for (std::int64_t i = 0; i < n; ++i) {
        ws.in[i][0] = f.coeffs()[i].real();
        ws.in[i][1] = f.coeffs()[i].imag();
    }
    fftw_execute_dft(plans_for(g).bwd, ws.in, ws.out);
    PhysicalField out(f.grid_ptr());
    for (std::int64_t i = 0; i < n; ++i) out.values()[i] = ws.out[i][0];
    return out;
}

double SpectralField::hermitian_defect() const {
    const Grid& g = *grid_;
    double worst = 0.0;
    const double scale = max_abs_coeff(*this);
    if (scale == 0.0) return 0.0;
    for (int i1 = 0; i1 < g.n(0); ++i1)
        for (int i2 = 0; i2 < g.n(1); ++i2)
            for (int i3 = 0; i3 < g.n(2); ++i3) {
                auto c = g.conj_index(i1, i2, i3);
                const complexd a = coeffs_[g.index(i1, i2, i3)];
                const complexd b = coeffs_[g.index(c[0], c[1], c[2])];
                worst = std::max(worst, std::abs(a - std::conj(b)));
            }
    return worst / scale;
}

void SpectralField::symmetrize() {
    const Grid& g = *grid_;
    for (int i1 = 0; i1 < g.n(0); ++i1)
        for (int i2 = 0; i2 < g.n(1); ++i2)
            for (int i3 = 0; i3 < g.n(2); ++i3) {
                auto c = g.conj_index(i1, i2, i3);
                const std::int64_t ia = g.index(i1, i2, i3);
                const std::int64_t ib = g.index(c[0], c[1], c[2]);
                if (ia > ib) continue;
                if (ia == ib) {
                    coeffs_[ia] = complexd(coeffs_[ia].real(), 0.0);
                } else {
                    const complexd avg = 0.5 * (coeffs_[ia] + std::conj(coeffs_[ib]));
                    coeffs_[ia] = avg;
                    coeffs_[ib] = std::conj(avg);
                }
            }
}

} // namespace critnorm
