#pragma once

#include <string>
#include <vector>

#include "critnorm/besov.hpp"
#include "critnorm/random_fields.hpp"

namespace critnorm {

/// Deterministic corpus description.  Regeneration from (seed, index) is
/// bit-identical; every generated field is mean-zero and, where applicable,
/// solenoidal.
struct Corpus {
    enum class Kind { BandScalar, Solenoidal, SingleMode, AnisoBand };
    Kind kind = Kind::BandScalar;
    std::uint64_t seed = 1;
    int count = 200;
    double band = 9.0;
    double slope = 1.0;
    bool exclude_axis_planes = false;
    BandSpec hband{0.0, 1e9};
    BandSpec vband{0.0, 1e9};

    SpectralField scalar(GridPtr grid, int index) const;
    VelocityState solenoidal_sample(GridPtr grid, int index) const;
};

/// One verified inequality within a suite.
struct CheckResult {
    std::string name;
    bool hard = false;          // constant-1 inequality, violations forbidden
    std::vector<double> lhs;    // per sample
    std::vector<double> rhs;
    double max_ratio = 0.0;
    double mean_ratio = 0.0;
    int violations = 0;         // nonfinite ratio, or rhs = 0 with lhs > 0
    int hard_violations = 0;

    // refinement stability: max ratio over the shared subset of samples
    double subset_max_ratio = 0.0;  // base grid, first refine_count samples
    double refined_max_ratio = 0.0; // refined grid, same samples
    double refinement_margin = 0.0; // |refined/subset - 1|
};

struct InequalityReport {
    std::string lemma_id;
    std::string semantics; // scope statement carried by every report
    std::uint64_t seed = 1;
    int base_n = 32;
    int refined_n = 64;
    int count = 200;
    int refine_count = 25;
    double declared_margin = 0.10;
    std::vector<CheckResult> checks;

    bool passed() const;
    std::string to_json() const; // deterministic serialization
};

struct LabConfig {
    std::uint64_t seed = 1;
    int base_n = 32;
    int refined_n = 64;
    int count = 200;
    int refine_count = 25;
    int threads = 4;
    double box = 2.0 * M_PI;
};

/// Suite ids in canonical order ("verify all" runs these ten).
const std::vector<std::string>& lab_suite_ids();

InequalityReport run_suite(const std::string& lemma_id, const LabConfig& cfg);

InequalityReport verify_bernstein(const LabConfig& cfg);              // lemma4.2-bernstein
InequalityReport verify_embedding_lp_besov(const LabConfig& cfg);     // lemma4.3-embed
InequalityReport verify_embedding_aniso(const LabConfig& cfg);        // lemma4.4-embed
InequalityReport verify_isoaniso_inclusion(const LabConfig& cfg);     // eq-isoanisoinclud
InequalityReport verify_inclusion_sobolev_aniso(const LabConfig& cfg);// eq-inclusion-sobolev-aniso
InequalityReport verify_product_laws(const LabConfig& cfg);           // lemma4.6-products
InequalityReport verify_interpolations(const LabConfig& cfg);         // lemma3.2-interp
InequalityReport verify_interpol_htheta(const LabConfig& cfg);        // lemma-interpol-htheta
InequalityReport verify_hoelder_power(const LabConfig& cfg);          // lemma5.1-hoelder
InequalityReport verify_anisotropic_trilinear(const LabConfig& cfg);  // eq-b.1-trilinear

} // namespace critnorm
