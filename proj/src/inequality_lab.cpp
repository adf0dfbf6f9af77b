#include "critnorm/inequality_lab.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "critnorm/littlewood_paley.hpp"
#include "critnorm/parallel.hpp"
#include "critnorm/vorticity.hpp"

namespace critnorm {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSemantics =
    "numerical non-falsification: LHS/RHS ratios are bounded over the corpus and stable "
    "under one grid refinement; no functional inequality is proven";

struct Sample {
    std::vector<double> lhs;
    std::vector<double> rhs;
};

/// One suite = named checks + a per-sample evaluator producing one
/// (lhs, rhs) per check.  The driver runs the corpus at the base size, the
/// first refine_count samples at the refined size, and fills the report
/// with a deterministic ordered reduction.
struct SuiteDef {
    std::string lemma_id;
    double declared_margin = 0.10;
    std::vector<std::string> names;
    std::vector<bool> hard;
    std::function<Sample(GridPtr, const LabConfig&, int)> eval;
};

InequalityReport run(const SuiteDef& def, const LabConfig& cfg) {
    InequalityReport rep;
    rep.lemma_id = def.lemma_id;
    rep.semantics = kSemantics;
    rep.seed = cfg.seed;
    rep.base_n = cfg.base_n;
    rep.refined_n = cfg.refined_n;
    rep.count = cfg.count;
    rep.refine_count = std::min(cfg.refine_count, cfg.count);
    rep.declared_margin = def.declared_margin;

    const std::size_t nchecks = def.names.size();
    rep.checks.resize(nchecks);
    for (std::size_t c = 0; c < nchecks; ++c) {
        rep.checks[c].name = def.names[c];
        rep.checks[c].hard = def.hard.empty() ? false : def.hard[c];
        rep.checks[c].lhs.resize(cfg.count);
        rep.checks[c].rhs.resize(cfg.count);
    }

    GridPtr base = Grid::make(cfg.base_n, cfg.box);
    std::vector<Sample> base_samples(cfg.count);
    parallel_for(cfg.count, cfg.threads,
                 [&](std::int64_t i) { base_samples[i] = def.eval(base, cfg, int(i)); });

    GridPtr fine = Grid::make(cfg.refined_n, cfg.box);
    std::vector<Sample> fine_samples(rep.refine_count);
    parallel_for(rep.refine_count, cfg.threads,
                 [&](std::int64_t i) { fine_samples[i] = def.eval(fine, cfg, int(i)); });

    for (std::size_t c = 0; c < nchecks; ++c) {
        CheckResult& r = rep.checks[c];
        double sum_ratio = 0.0;
        int counted = 0;
        for (int i = 0; i < cfg.count; ++i) {
            const double lhs = base_samples[i].lhs.at(c);
            const double rhs = base_samples[i].rhs.at(c);
            r.lhs[i] = lhs;
            r.rhs[i] = rhs;
            if (!std::isfinite(lhs) || !std::isfinite(rhs) || (rhs == 0.0 && lhs > 0.0)) {
                ++r.violations;
                continue;
            }
            const double ratio = rhs > 0.0 ? lhs / rhs : 0.0;
            r.max_ratio = std::max(r.max_ratio, ratio);
            sum_ratio += ratio;
            ++counted;
            if (r.hard && lhs > rhs * (1.0 + 1e-12) + 1e-300) ++r.hard_violations;
            if (i < rep.refine_count)
                r.subset_max_ratio = std::max(r.subset_max_ratio, ratio);
        }
        r.mean_ratio = counted ? sum_ratio / counted : 0.0;
        for (int i = 0; i < rep.refine_count; ++i) {
            const double lhs = fine_samples[i].lhs.at(c);
            const double rhs = fine_samples[i].rhs.at(c);
            if (std::isfinite(lhs) && std::isfinite(rhs) && rhs > 0.0)
                r.refined_max_ratio = std::max(r.refined_max_ratio, lhs / rhs);
            else if (lhs > 0.0)
                ++r.violations;
        }
        r.refinement_margin = (r.subset_max_ratio > 0.0)
                                  ? std::abs(r.refined_max_ratio / r.subset_max_ratio - 1.0)
                                  : 0.0;
    }
    return rep;
}

double ratio_norm_vec2(const SpectralField& a, const SpectralField& b, const NormSpec& spec) {
    const double na = norm(a, spec);
    const double nb = norm(b, spec);
    return std::sqrt(na * na + nb * nb);
}

double grad_htheta(const SpectralField& a, double theta) {
    return grad_norm(a, NormSpec::htheta(theta));
}

/// (||omega_{3/4}||_{L^2}, ||grad omega_{3/4}||_{L^2}) with the stable
/// quadrature for the gradient factor.
std::pair<double, double> omega34_pair(const SpectralField& omega) {
    PhysicalField op = to_physical(omega);
    const double n34 =
        std::sqrt(integral(PhysicalField(omega.grid_ptr(), op.values().abs().pow(1.5))));
    const double g34 = std::sqrt(grad_signed_power34_sq_integral(omega));
    return {n34, g34};
}

} // namespace

SpectralField Corpus::scalar(GridPtr grid, int index) const {
    const std::uint64_t s = GaussianRng::mix(seed, 101, std::uint64_t(index));
    switch (kind) {
        case Kind::BandScalar:
            return random_scalar(grid, s, band, slope, exclude_axis_planes);
        case Kind::AnisoBand:
            return random_anisotropic(grid, s, hband, vband, slope);
        case Kind::SingleMode: {
            GaussianRng rng(s);
            const int b = std::max(2, int(band));
            const int m1 = 1 + int(rng.uniform() * (b - 1));
            const int m3 = 1 + int(rng.uniform() * (b - 1));
            SpectralField f = single_mode(grid, m1, 0, m3, {0.5, 0.25});
            f.symmetrize();
            return f;
        }
        case Kind::Solenoidal:
            break;
    }
    throw ParameterError("corpus: scalar sample requested from a vector corpus");
}

VelocityState Corpus::solenoidal_sample(GridPtr grid, int index) const {
    const std::uint64_t s = GaussianRng::mix(seed, 202, std::uint64_t(index));
    return random_solenoidal(grid, s, band, slope, /*zero_horizontal_mean=*/true);
}

bool InequalityReport::passed() const {
    for (const auto& c : checks) {
        if (c.violations > 0 || c.hard_violations > 0) return false;
        if (!c.hard && c.refinement_margin > declared_margin) return false;
    }
    return true;
}

std::string InequalityReport::to_json() const {
    json j;
    j["lemma_id"] = lemma_id;
    j["semantics"] = semantics;
    j["seed"] = seed;
    j["base_n"] = base_n;
    j["refined_n"] = refined_n;
    j["count"] = count;
    j["refine_count"] = refine_count;
    j["declared_margin"] = declared_margin;
    j["passed"] = passed();
    j["checks"] = json::array();
    for (const auto& c : checks) {
        json jc;
        jc["name"] = c.name;
        jc["hard"] = c.hard;
        jc["max_ratio"] = c.max_ratio;
        jc["mean_ratio"] = c.mean_ratio;
        jc["violations"] = c.violations;
        jc["hard_violations"] = c.hard_violations;
        jc["subset_max_ratio"] = c.subset_max_ratio;
        jc["refined_max_ratio"] = c.refined_max_ratio;
        jc["refinement_margin"] = c.refinement_margin;
        jc["lhs"] = c.lhs;
        jc["rhs"] = c.rhs;
        j["checks"].push_back(jc);
    }
    return j.dump(2);
}

// lemma4.2-bernstein ---------------------------------------------------------

InequalityReport verify_bernstein(const LabConfig& cfg) {
    SuiteDef def;
    def.lemma_id = "lemma4.2-bernstein";
    def.declared_margin = 0.10;

    struct Pair {
        double from, to;
    };
    const std::vector<Pair> pairs = {{1.0, 2.0},
                                     {2.0, std::numeric_limits<double>::infinity()},
                                     {1.5, 3.0}};
    const std::vector<std::array<int, 2>> alphas = {{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    const std::vector<int> ball_scales = {1, 2, 3};
    const std::vector<int> ring_scales = {1, 2};

    auto pname = [](double x) {
        std::ostringstream os;
        os << x;
        return os.str();
    };
    for (int k : ball_scales) {
        for (const auto& pr : pairs)
            def.names.push_back("hball(2^" + std::to_string(k) + "):p" + pname(pr.from) + "->p" +
                                pname(pr.to));
        for (const auto& al : alphas)
            def.names.push_back("hball(2^" + std::to_string(k) + "):deriv(" +
                                std::to_string(al[0]) + "," + std::to_string(al[1]) + ")");
    }
    for (int l : ball_scales)
        for (const auto& pr : pairs)
            def.names.push_back("vball(2^" + std::to_string(l) + "):q" + pname(pr.from) + "->q" +
                                pname(pr.to));
    for (int k : ring_scales)
        for (int N : {1, 2})
            def.names.push_back("hring(2^" + std::to_string(k) + "):N=" + std::to_string(N));
    for (int l : ring_scales)
        for (int N : {1, 2})
            def.names.push_back("vring(2^" + std::to_string(l) + "):N=" + std::to_string(N));

    def.eval = [pairs, alphas, ball_scales, ring_scales](GridPtr grid, const LabConfig& cfg,
                                                         int index) {
        Sample out;
        auto push = [&](double l, double r) {
            out.lhs.push_back(l);
            out.rhs.push_back(r);
        };
        for (int k : ball_scales) {
            Corpus c;
            c.kind = Corpus::Kind::AnisoBand;
            c.seed = cfg.seed + 10 * k;
            c.hband = {0.0, std::ldexp(1.0, k)};
            c.vband = {1.0, 6.0};
            SpectralField a = c.scalar(grid, index);
            PhysicalField ap = to_physical(a);
            for (const auto& pr : pairs) {
                const double lhs = mixed_lp_h_lq_v(ap, pr.to, 2.0);
                const double rhs =
                    std::pow(std::ldexp(1.0, k), 2.0 * (1.0 / pr.from - 1.0 / pr.to)) *
                    mixed_lp_h_lq_v(ap, pr.from, 2.0);
                push(lhs, rhs);
            }
            for (const auto& al : alphas) {
                SpectralField d = a;
                for (int r = 0; r < al[0]; ++r) d = derivative(d, 0);
                for (int r = 0; r < al[1]; ++r) d = derivative(d, 1);
                const double lhs = mixed_lp_h_lq_v(to_physical(d), 2.0, 2.0);
                const double rhs = std::pow(std::ldexp(1.0, k), al[0] + al[1]) *
                                   mixed_lp_h_lq_v(ap, 2.0, 2.0);
                push(lhs, rhs);
            }
        }
        for (int l : ball_scales) {
            Corpus c;
            c.kind = Corpus::Kind::AnisoBand;
            c.seed = cfg.seed + 1000 + 10 * l;
            c.hband = {1.0, 6.0};
            c.vband = {0.0, std::ldexp(1.0, l)};
            PhysicalField ap = to_physical(c.scalar(grid, index));
            for (const auto& pr : pairs) {
                const double lhs = mixed_lp_h_lq_v(ap, 2.0, pr.to);
                const double rhs = std::pow(std::ldexp(1.0, l), 1.0 / pr.from - 1.0 / pr.to) *
                                   mixed_lp_h_lq_v(ap, 2.0, pr.from);
                push(lhs, rhs);
            }
        }
        for (int k : ring_scales) {
            Corpus c;
            c.kind = Corpus::Kind::AnisoBand;
            c.seed = cfg.seed + 2000 + 10 * k;
            c.hband = {0.5 * std::ldexp(1.0, k), 2.0 * std::ldexp(1.0, k)};
            c.vband = {0.0, 6.0};
            SpectralField a = c.scalar(grid, index);
            const double base = mixed_lp_h_lq_v(to_physical(a), 2.0, 2.0);
            for (int N : {1, 2}) {
                double sup = 0.0;
                for (int a1 = 0; a1 <= N; ++a1) {
                    const int a2 = N - a1;
                    SpectralField d = a;
                    for (int r = 0; r < a1; ++r) d = derivative(d, 0);
                    for (int r = 0; r < a2; ++r) d = derivative(d, 1);
                    sup = std::max(sup, mixed_lp_h_lq_v(to_physical(d), 2.0, 2.0));
                }
                push(base, std::pow(std::ldexp(1.0, k), -N) * sup);
            }
        }
        for (int l : ring_scales) {
            Corpus c;
            c.kind = Corpus::Kind::AnisoBand;
            c.seed = cfg.seed + 3000 + 10 * l;
            c.hband = {0.0, 6.0};
            c.vband = {0.5 * std::ldexp(1.0, l), 2.0 * std::ldexp(1.0, l)};
            SpectralField a = c.scalar(grid, index);
            const double base = mixed_lp_h_lq_v(to_physical(a), 2.0, 2.0);
            for (int N : {1, 2}) {
                SpectralField d = a;
                for (int r = 0; r < N; ++r) d = derivative(d, 2);
                push(base, std::pow(std::ldexp(1.0, l), -N) *
                               mixed_lp_h_lq_v(to_physical(d), 2.0, 2.0));
            }
        }
        return out;
    };
    def.hard.assign(def.names.size(), false);
    return run(def, cfg);
}

// lemma4.3-embed -------------------------------------------------------------

namespace {

std::vector<PhysicalField> vertical_blocks(const SpectralField& a) {
    const BlockIndexRange rv = block_range(a.grid(), BlockMode::Vertical);
    std::vector<PhysicalField> blocks;
    blocks.reserve(rv.j_max - rv.j_min + 1);
    for (int j = rv.j_min; j <= rv.j_max; ++j)
        blocks.push_back(to_physical(dyadic_block(a, BlockMode::Vertical, j)));
    return blocks;
}

/// ||a||_{L^p_h((B^s_{p,q})_v)} by iterated quadrature, inner axis first,
/// over precomputed physical vertical blocks.
double lp_h_besov_v(const Grid& g, const std::vector<PhysicalField>& blocks, double s, double p,
                    double q) {
    const BlockIndexRange rv = block_range(g, BlockMode::Vertical);
    const int nb = int(blocks.size());
    const double dz = g.L(2) / g.n(2);
    const double dA = (g.L(0) / g.n(0)) * (g.L(1) / g.n(1));
    double acc_h = 0.0;
    for (int i1 = 0; i1 < g.n(0); ++i1)
        for (int i2 = 0; i2 < g.n(1); ++i2) {
            double lq = 0.0;
            for (int jb = 0; jb < nb; ++jb) {
                double lp = 0.0;
                for (int i3 = 0; i3 < g.n(2); ++i3)
                    lp += pow_abs(blocks[jb](i1, i2, i3), p);
                lp = std::pow(lp * dz, 1.0 / p);
                lq += pow_abs(std::pow(2.0, (rv.j_min + jb) * s) * lp, q);
            }
            acc_h += pow_abs(std::pow(lq, 1.0 / q), p);
        }
    return std::pow(acc_h * dA, 1.0 / p);
}

} // namespace

InequalityReport verify_embedding_lp_besov(const LabConfig& cfg) {
    SuiteDef def;
    def.lemma_id = "lemma4.3-embed";
    def.declared_margin = 0.10;
    const std::vector<double> svals = {0.5, 0.9, 1.3};
    const std::vector<std::array<double, 2>> pq = {{2.0, 2.0}, {3.0, 2.0}, {2.0, 1.0}};
    for (double s : svals)
        for (auto [p, q] : pq) {
            std::ostringstream os;
            os << "s=" << s << ",p=" << p << ",q=" << q;
            def.names.push_back(os.str());
        }
    def.eval = [svals, pq](GridPtr grid, const LabConfig& cfg, int index) {
        Corpus c;
        c.seed = cfg.seed;
        c.band = 9.0;
        SpectralField a = c.scalar(grid, index);
        const auto vblocks = vertical_blocks(a);
        // iso blocks reused across the (s,q) grid: only the L^p norms vary
        const BlockIndexRange ri = block_range(*grid, BlockMode::Iso);
        std::vector<PhysicalField> iblocks;
        for (int j = ri.j_min; j <= ri.j_max; ++j)
            iblocks.push_back(to_physical(dyadic_block(a, BlockMode::Iso, j)));
        auto besov_from_blocks = [&](double s, double p, double q) {
            double acc = 0.0;
            for (int jb = 0; jb < int(iblocks.size()); ++jb)
                acc += pow_abs(std::pow(2.0, (ri.j_min + jb) * s) * lp_norm(iblocks[jb], p), q);
            return std::pow(acc, 1.0 / q);
        };
        Sample out;
        for (double s : svals)
            for (auto [p, q] : pq) {
                out.lhs.push_back(lp_h_besov_v(*grid, vblocks, s, p, q));
                out.rhs.push_back(besov_from_blocks(s, p, q));
            }
        return out;
    };
    def.hard.assign(def.names.size(), false);
    return run(def, cfg);
}

// lemma4.4-embed -------------------------------------------------------------

InequalityReport verify_embedding_aniso(const LabConfig& cfg) {
    SuiteDef def;
    def.lemma_id = "lemma4.4-embed";
    def.declared_margin = 0.10;
    const std::vector<double> svals = {0.5, 0.9, 1.3};
    const std::vector<double> thfrac = {0.2, 0.5, 0.8};
    const std::vector<std::array<double, 2>> pq = {{3.0, 2.0}, {2.0, 1.0}};
    std::vector<std::array<double, 4>> params;
    for (double s : svals)
        for (double f : thfrac) params.push_back({s, f * s, 2.0, 2.0});
    for (auto [p, q] : pq) params.push_back({0.9, 0.45, p, q});
    for (auto& pr : params) {
        std::ostringstream os;
        os << "s=" << pr[0] << ",theta=" << pr[1] << ",p=" << pr[2] << ",q=" << pr[3];
        def.names.push_back(os.str());
    }
    def.eval = [params](GridPtr grid, const LabConfig& cfg, int index) {
        Corpus c;
        c.seed = cfg.seed;
        c.band = 9.0;
        SpectralField a = c.scalar(grid, index);
        Sample out;
        for (auto& pr : params) {
            const double s = pr[0], th = pr[1], p = pr[2], q = pr[3];
            out.lhs.push_back(norm(a, NormSpec::aniso(s - th, p, q, th, 1.0)));
            out.rhs.push_back(norm(a, NormSpec::besov(s, p, q)));
        }
        return out;
    };
    def.hard.assign(def.names.size(), false);
    return run(def, cfg);
}

// eq-isoanisoinclud ----------------------------------------------------------

InequalityReport verify_isoaniso_inclusion(const LabConfig& cfg) {
    SuiteDef def;
    def.lemma_id = "eq-isoanisoinclud";
    def.declared_margin = 0.10;
    const std::vector<std::array<double, 2>> pos = {{0.3, 0.4}, {0.5, 0.5}, {1.0, 0.2}};
    const std::vector<std::array<double, 2>> neg = {{-0.3, -0.2}, {-0.5, -0.1}};
    for (auto& ss : pos) {
        std::ostringstream os;
        os << "upper:s=" << ss[0] << ",sp=" << ss[1];
        def.names.push_back(os.str());
        def.hard.push_back(true);
    }
    for (auto& ss : neg) {
        std::ostringstream os;
        os << "lower:s=" << ss[0] << ",sp=" << ss[1];
        def.names.push_back(os.str());
        def.hard.push_back(true);
    }
    def.eval = [pos, neg](GridPtr grid, const LabConfig& cfg, int index) {
        Corpus c;
        c.seed = cfg.seed;
        c.band = 9.0;
        // the anisotropic families do not see the k_h = 0 / k3 = 0 planes;
        // restrict the corpus so both sides measure the same modes
        c.exclude_axis_planes = true;
        SpectralField a = c.scalar(grid, index);
        Sample out;
        for (auto& ss : pos) {
            out.lhs.push_back(norm(a, NormSpec::sobolev_aniso(ss[0], ss[1])));
            out.rhs.push_back(norm(a, NormSpec::sobolev_iso(ss[0] + ss[1])));
        }
        for (auto& ss : neg) {
            out.lhs.push_back(norm(a, NormSpec::sobolev_iso(ss[0] + ss[1])));
            out.rhs.push_back(norm(a, NormSpec::sobolev_aniso(ss[0], ss[1])));
        }
        return out;
    };
    return run(def, cfg);
}

// eq-inclusion-sobolev-aniso -------------------------------------------------

InequalityReport verify_inclusion_sobolev_aniso(const LabConfig& cfg) {
    SuiteDef def;
    def.lemma_id = "eq-inclusion-sobolev-aniso";
    def.declared_margin = 0.10;
    struct P {
        double p2, p1, s1, s2, q1, q2;
    };
    const std::vector<P> params = {
        {1.0, 2.0, 0.5, 0.3, 1.0, 1.0},
        {1.5, 3.0, 0.5, 0.3, 2.0, 2.0},
        {2.0, 4.0, 0.9, 0.2, 1.0, 2.0},
        {2.0, std::numeric_limits<double>::infinity(), 0.9, 0.2, 1.0, 1.0}};
    for (auto& pr : params) {
        std::ostringstream os;
        os << "p" << pr.p2 << "->p" << pr.p1 << ",s1=" << pr.s1 << ",s2=" << pr.s2;
        def.names.push_back(os.str());
    }
    def.eval = [params](GridPtr grid, const LabConfig& cfg, int index) {
        Corpus c;
        c.seed = cfg.seed;
        c.band = 9.0;
        SpectralField a = c.scalar(grid, index);
        Sample out;
        for (auto& pr : params) {
            const double gap = 1.0 / pr.p2 - 1.0 / pr.p1;
            out.lhs.push_back(
                norm(a, NormSpec::aniso(pr.s1 - 2.0 * gap, pr.p1, pr.q1, pr.s2 - gap, pr.q2)));
            out.rhs.push_back(norm(a, NormSpec::aniso(pr.s1, pr.p2, pr.q1, pr.s2, pr.q2)));
        }
        return out;
    };
    def.hard.assign(def.names.size(), false);
    return run(def, cfg);
}

// lemma4.6-products ----------------------------------------------------------

InequalityReport verify_product_laws(const LabConfig& cfg) {
    SuiteDef def;
    def.lemma_id = "lemma4.6-products";
    def.declared_margin = 0.15;
    struct P {
        double p1, p2, q, s1, s2, g1, g2;
    };
    // hypotheses: p1 >= p2, 1/p1 + 1/p2 <= 1, s_i < 2/p_i (<= for q = 1),
    // s1 + s2 > 0, sigma_i < 1/p_i, sigma1 + sigma2 > 0
    const std::vector<P> params = {
        {2.0, 2.0, 1.0, 0.5, 0.5, 0.25, 0.25},
        {2.0, 2.0, 2.0, 0.3, 0.4, 0.2, 0.2},
        {2.0, 2.0, 1.0, 0.125, 0.125, 0.175, 0.175}, // the theta = 1/8, p = 5 case
        {4.0, 2.0, 2.0, 0.3, 0.5, 0.2, 0.3},
        {3.0, 1.5, 1.0, 0.5, 1.0, 0.3, 0.5},
        {2.0, 2.0, 1.0, -0.3, 0.8, -0.2, 0.45},
    };
    for (auto& pr : params) {
        std::ostringstream os;
        os << "p1=" << pr.p1 << ",p2=" << pr.p2 << ",q=" << pr.q << ",s=(" << pr.s1 << ","
           << pr.s2 << "),sigma=(" << pr.g1 << "," << pr.g2 << ")";
        def.names.push_back(os.str());
    }
    def.eval = [params](GridPtr grid, const LabConfig& cfg, int index) {
        Corpus hi, lo;
        hi.seed = cfg.seed + 7;
        hi.band = 9.0;
        lo.seed = cfg.seed + 8;
        lo.band = 4.0;
        // alternate the high-low pairing with the symmetric case a = b
        SpectralField a = hi.scalar(grid, index);
        SpectralField b = (index % 2 == 0) ? lo.scalar(grid, index) : a;
        SpectralField ab = product(a, b);
        Sample out;
        for (auto& pr : params) {
            const double na = norm(a, NormSpec::aniso(pr.s1, pr.p1, pr.q, pr.g1, pr.q));
            const double nb = norm(b, NormSpec::aniso(pr.s2, pr.p2, pr.q, pr.g2, pr.q));
            const double np = norm(ab, NormSpec::aniso(pr.s1 + pr.s2 - 2.0 / pr.p2, pr.p1, pr.q,
                                                       pr.g1 + pr.g2 - 1.0 / pr.p2, pr.q));
            out.lhs.push_back(np);
            out.rhs.push_back(na * nb);
        }
        return out;
    };
    def.hard.assign(def.names.size(), false);
    return run(def, cfg);
}

// lemma3.2-interp ------------------------------------------------------------

InequalityReport verify_interpolations(const LabConfig& cfg) {
    SuiteDef def;
    def.lemma_id = "lemma3.2-interp";
    def.declared_margin = 0.15;
    const std::vector<double> svals = {-0.5, 0.0, 0.5, 5.0 / 6.0};
    def.names.push_back("grad-L32");
    for (double s : svals) {
        std::ostringstream os;
        os << "Hs:s=" << s;
        def.names.push_back(os.str());
    }
    def.names.push_back("dual-sobolev:H-1/2<=L3/2");
    def.eval = [svals](GridPtr grid, const LabConfig& cfg, int index) {
        Corpus c;
        c.seed = cfg.seed;
        c.band = 6.0;
        SpectralField a = c.scalar(grid, index);
        auto [n34, g34] = omega34_pair(a);
        Sample out;
        {
            PhysicalField g0 = to_physical(derivative(a, 0));
            PhysicalField g1 = to_physical(derivative(a, 1));
            PhysicalField g2 = to_physical(derivative(a, 2));
            PhysicalField mag(a.grid_ptr(), (g0.values().square() + g1.values().square() +
                                             g2.values().square())
                                                .sqrt());
            out.lhs.push_back(lp_norm(mag, 1.5));
            out.rhs.push_back(g34 * std::pow(n34, 1.0 / 3.0));
        }
        for (double s : svals) {
            out.lhs.push_back(norm(a, NormSpec::sobolev_iso(s)));
            out.rhs.push_back(std::pow(n34, 5.0 / 6.0 - s) * std::pow(g34, 0.5 + s));
        }
        out.lhs.push_back(norm(a, NormSpec::sobolev_iso(-0.5)));
        out.rhs.push_back(lp_norm(a, 1.5));
        return out;
    };
    def.hard.assign(def.names.size(), false);
    return run(def, cfg);
}

// lemma-interpol-htheta ------------------------------------------------------

InequalityReport verify_interpol_htheta(const LabConfig& cfg) {
    SuiteDef def;
    def.lemma_id = "lemma-interpol-htheta";
    def.declared_margin = 0.15;
    const std::vector<std::array<double, 2>> at = {{0.2, 0.125}, {0.35, 0.25}, {0.45, 0.4}};
    for (auto& p : at) {
        std::ostringstream os;
        os << "alpha=" << p[0] << ",theta=" << p[1];
        def.names.push_back(os.str());
    }
    def.eval = [at](GridPtr grid, const LabConfig& cfg, int index) {
        Corpus c;
        c.seed = cfg.seed;
        c.band = 8.0;
        c.exclude_axis_planes = true;
        SpectralField a = c.scalar(grid, index);
        Sample out;
        for (auto& p : at) {
            const double alpha = p[0], theta = p[1];
            out.lhs.push_back(norm(a, NormSpec::aniso(0.0, 2.0, 1.0, 0.5 - alpha, 1.0)));
            out.rhs.push_back(std::pow(norm(a, NormSpec::htheta(theta)), alpha) *
                              std::pow(grad_htheta(a, theta), 1.0 - alpha));
        }
        return out;
    };
    def.hard.assign(def.names.size(), false);
    return run(def, cfg);
}

// lemma5.1-hoelder -----------------------------------------------------------

InequalityReport verify_hoelder_power(const LabConfig& cfg) {
    SuiteDef def;
    def.lemma_id = "lemma5.1-hoelder";
    def.declared_margin = 0.15;
    def.names = {"G(r)=r|r|^{-1/3}:s=0.9,p=2,q=2"};
    def.hard = {false};
    def.eval = [](GridPtr grid, const LabConfig& cfg, int index) {
        Corpus c;
        c.seed = cfg.seed;
        c.band = 8.0;
        SpectralField a = c.scalar(grid, index);
        const double alpha = 2.0 / 3.0, s = 0.9, p = 2.0, q = 2.0;
        SpectralField Ga = signed_power(a, alpha);
        Sample out;
        out.lhs.push_back(norm(Ga, NormSpec::besov(alpha * s, p / alpha, q / alpha)));
        out.rhs.push_back(std::pow(norm(a, NormSpec::besov(s, p, q)), alpha));
        return out;
    };
    return run(def, cfg);
}

// eq-b.1-trilinear -----------------------------------------------------------

InequalityReport verify_anisotropic_trilinear(const LabConfig& cfg) {
    SuiteDef def;
    def.lemma_id = "eq-b.1-trilinear";
    def.declared_margin = 0.15;
    const std::vector<double> sigmas = {0.8, 0.9};
    for (double sg : sigmas) {
        std::ostringstream os;
        os << "b.1-L32:sigma=" << sg;
        def.names.push_back(os.str());
    }
    for (double sg : sigmas) {
        std::ostringstream os;
        os << "b.1-Htheta:sigma=" << sg;
        def.names.push_back(os.str());
    }
    def.names.push_back("lemma6.1:A=Id");
    def.names.push_back("lemma6.1:A=d33invlap");
    def.names.push_back("lemma6.2:l=1,2");
    def.names.push_back("prop2.1:alpha=0.25");
    def.hard.assign(def.names.size(), false);

    def.eval = [sigmas](GridPtr grid, const LabConfig& cfg, int index) {
        const double theta = 0.125, p = 5.0;
        Corpus cf, ca;
        cf.seed = cfg.seed + 21;
        cf.band = 8.0;
        cf.exclude_axis_planes = true;
        ca.seed = cfg.seed + 22;
        ca.band = 8.0;
        Corpus cv;
        cv.kind = Corpus::Kind::Solenoidal;
        cv.seed = cfg.seed + 23;
        cv.band = 8.0;

        SpectralField f = cf.scalar(grid, index);
        SpectralField a = ca.scalar(grid, index);
        VelocityState v = cv.solenoidal_sample(grid, index);
        SpectralField omega = derivative(v.v[1], 0) - derivative(v.v[0], 1);
        SpectralField g3 = derivative(v.v[2], 2);
        PhysicalField om12 = signed_power(to_physical(omega), 0.5);
        SpectralField om34 = signed_power(omega, 0.75);
        auto o34 = omega34_pair(omega);

        Sample out;
        double tri = 0.0;
        {
            SpectralField ihf = apply_multiplier(f, MultiplierSpec::inv_laplacian_h());
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    PhysicalField d1 = to_physical(derivative(ihf, i));
                    PhysicalField d2 = to_physical(derivative(a, j));
                    PhysicalField prod(grid, d1.values() * d2.values() * om12.values());
                    tri = std::max(tri, std::abs(integral(prod)));
                }
        }
        for (double sg : sigmas) {
            const double s = 1.5 - 2.0 * sg / 3.0;
            out.lhs.push_back(tri);
            out.rhs.push_back(lp_norm(f, 1.5) * norm(a, NormSpec::sobolev_iso(s)) *
                              std::pow(norm(om34, NormSpec::sobolev_iso(sg)), 2.0 / 3.0));
        }
        for (double sg : sigmas) {
            const double s = 1.5 - 2.0 * sg / 3.0;
            out.lhs.push_back(tri);
            out.rhs.push_back(norm(f, NormSpec::htheta(theta)) *
                              norm(a, NormSpec::sobolev_iso(s)) *
                              std::pow(norm(om34, NormSpec::sobolev_iso(sg)), 2.0 / 3.0));
        }
        {
            SpectralField fg = product(f, a);
            const double mixed = 0.5 - theta - 1.0 / p;
            const double rhs = norm(f, NormSpec::sobolev_aniso(theta, mixed)) *
                               norm(a, NormSpec::sobolev_aniso(theta, mixed)) *
                               norm(v.v[2], NormSpec::sobolev_iso(0.5 + 2.0 / p));
            out.lhs.push_back(std::abs(htheta_pairing(fg, g3, theta)));
            out.rhs.push_back(rhs);
            SpectralField Afg = apply_multiplier(fg, MultiplierSpec::d33_inv_laplacian());
            out.lhs.push_back(std::abs(htheta_pairing(Afg, g3, theta)));
            out.rhs.push_back(rhs);
        }
        {
            double lhs = 0.0;
            for (int l = 0; l < 2; ++l) {
                SpectralField t = product(to_physical(v.v[l]), to_physical(derivative(g3, l)));
                lhs = std::max(lhs, std::abs(htheta_pairing(t, g3, theta)));
            }
            const double gth = norm(g3, NormSpec::htheta(theta));
            const double ggth = grad_htheta(g3, theta);
            const double rhs =
                norm(v.v[2], NormSpec::sobolev_iso(0.5 + 2.0 / p)) *
                (std::pow(o34.first, 1.0 / 3.0 + 2.0 / p) * std::pow(o34.second, 1.0 - 2.0 / p) +
                 std::pow(gth, 2.0 / p) * std::pow(ggth, 1.0 - 2.0 / p)) *
                ggth;
            out.lhs.push_back(lhs);
            out.rhs.push_back(rhs);
        }
        {
            const double alpha = 0.25;
            const NormSpec sp = NormSpec::aniso(1.0, 2.0, 1.0, 0.5 - alpha, 1.0);
            const double lhs = ratio_norm_vec2(v.v[0], v.v[1], sp);
            const double rhs =
                std::pow(o34.first, 1.0 / 3.0 + alpha) * std::pow(o34.second, 1.0 - alpha) +
                std::pow(lp_norm(g3, 2.0), alpha) * std::pow(grad_htheta(g3, theta), 1.0 - alpha);
            out.lhs.push_back(lhs);
            out.rhs.push_back(rhs);
        }
        return out;
    };
    return run(def, cfg);
}

const std::vector<std::string>& lab_suite_ids() {
    static const std::vector<std::string> ids = {"lemma4.2-bernstein",
                                                 "lemma4.3-embed",
                                                 "lemma4.4-embed",
                                                 "eq-isoanisoinclud",
                                                 "eq-inclusion-sobolev-aniso",
                                                 "lemma4.6-products",
                                                 "lemma3.2-interp",
                                                 "lemma-interpol-htheta",
                                                 "lemma5.1-hoelder",
                                                 "eq-b.1-trilinear"};
    return ids;
}

InequalityReport run_suite(const std::string& lemma_id, const LabConfig& cfg) {
    if (lemma_id == "lemma4.2-bernstein") return verify_bernstein(cfg);
    if (lemma_id == "lemma4.3-embed") return verify_embedding_lp_besov(cfg);
    if (lemma_id == "lemma4.4-embed") return verify_embedding_aniso(cfg);
    if (lemma_id == "eq-isoanisoinclud") return verify_isoaniso_inclusion(cfg);
    if (lemma_id == "eq-inclusion-sobolev-aniso") return verify_inclusion_sobolev_aniso(cfg);
    if (lemma_id == "lemma4.6-products") return verify_product_laws(cfg);
    if (lemma_id == "lemma3.2-interp") return verify_interpolations(cfg);
    if (lemma_id == "lemma-interpol-htheta") return verify_interpol_htheta(cfg);
    if (lemma_id == "lemma5.1-hoelder") return verify_hoelder_power(cfg);
    if (lemma_id == "eq-b.1-trilinear") return verify_anisotropic_trilinear(cfg);
    throw ParameterError("verify: unknown suite id '" + lemma_id + "'");
}

} // namespace critnorm
