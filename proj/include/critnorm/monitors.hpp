#pragma once

#include <optional>
#include <string>
#include <vector>

#include "critnorm/besov.hpp"
#include "critnorm/ns_solver.hpp"

namespace critnorm {

/// One scaling-invariant blow-up monitor.  Canonical text encodings:
///   criterion[:p=5,e=0,0,1]   ||v.e||^p in Hdot^{1/2+2/p}
///   vorticity-l32             (||Omega||_{L^{3/2}}, ||omega_{3/4}||, ||grad omega_{3/4}||)
///   omega34-energy            (||omega_{3/4}||^2, ||grad omega_{3/4}||^2): the L^{3/2}
///                             energy budget pair, integral accumulates the gradient term
///   htheta[:theta=0.125]      (||d3v3||, ||grad d3v3||, ||d3^2 v3||) in H_theta
///   d3sq-htheta[:theta=]      ||d3^2 v3||^2_{H_theta} (running integral is its time integral)
///   endpoint-bp[:p=5]         sum of ||d_l v^k||^p_{B_p} over the nine components
///   bkm-sup                   ||Omega||_{L^inf} (Beale-Kato-Majda quantity)
///   energy                    (1/2)||v||^2_{L^2}
///   klips                     L^{3/2} budget terms of the vorticity components
///   gronwall[:C=1,p=5]        double-exponential envelope report
struct MonitorSpec {
    enum class Kind {
        CriterionIntegral,
        VorticityL32,
        Omega34Energy,
        HThetaEnergy,
        D3sqHTheta,
        EndpointBp,
        BKMSupNorm,
        EnergyBalance,
        KlipsBalance,
        GronwallEnvelope,
    };
    Kind kind = Kind::CriterionIntegral;
    std::array<double, 3> e{0.0, 0.0, 1.0}; // unit direction for criterion
    double p = 5.0;                          // in (4,6) for criterion/gronwall
    double theta = 0.125;                    // in (1/2-2/p, 1/6)
    double C = 1.0;                          // Gronwall constant, user supplied

    void validate() const;
    static MonitorSpec parse(const std::string& text);
    std::string str() const;
    /// Column names of value(), excluding time/integral columns.
    std::vector<std::string> value_names() const;
};

/// Time series of one monitor: instantaneous values plus the running
/// trapezoidal integral of the first value column.
struct MonitorSeries {
    MonitorSpec spec;
    std::vector<double> times;
    std::vector<std::vector<double>> values; // one row per time
    std::vector<double> running_integral;    // trapezoid of values[.][0]

    void append(double t, std::vector<double> row);
    double final_integral() const { return running_integral.empty() ? 0.0 : running_integral.back(); }
    void write_csv(const std::string& path) const;
};

/// Instantaneous evaluation of a monitor on a snapshot.
std::vector<double> evaluate_monitor(const MonitorSpec& spec, const VelocityState& v);

/// ||v.e||^p_{Hdot^{1/2+2/p}} (isotropic homogeneous Sobolev weighted sum).
double criterion_integrand(const VelocityState& v, const std::array<double, 3>& e, double p);

/// (||Omega||_{L^{3/2}}, ||omega_{3/4}||_{L^2}, ||grad omega_{3/4}||_{L^2}).
std::array<double, 3> vorticity_monitors(const VelocityState& v);

/// (||d3v3||_{H_theta}, ||grad d3v3||_{H_theta}, ||d3^2 v3||_{H_theta}).
std::array<double, 3> htheta_monitors(const VelocityState& v, double theta);

/// ||d_l v^k||_{B_{p(k,l)}} for all nine derivative components.
std::array<std::array<double, 3>, 3> endpoint_bp(const VelocityState& v,
                                                 const std::array<std::array<double, 3>, 3>& p);

/// Double-exponential envelope of the closure estimate:
///   E(t)    = exp(C exp(C int_0^t ||v3||^p dt')),
///   bound(t) = ||Omega_0||_{L^{3/2}}^{(p+3)/2} E(t),
/// compared against the measured ||omega_{3/4}(t)||^{2(p+3)/3}; the
/// companion bound ||Omega_0||^2 E(t) caps the H_theta budget
/// ||d3v3(t)||^2 + int ||grad d3v3||^2 dt' when those series are supplied.
struct GronwallReport {
    std::vector<double> times;
    std::vector<double> envelope;  // bound(t)
    std::vector<double> measured;  // ||omega_{3/4}(t)||^{2(p+3)/3}
    std::vector<double> margin;    // measured / bound
    std::vector<double> envelope_htheta; // companion bound, when requested
    std::vector<double> measured_htheta;
    bool within_envelope = true;
    double C = 1.0;
    double p = 5.0;
};
GronwallReport gronwall_envelope(const MonitorSeries& criterion_series,
                                 const std::vector<double>& omega34_l2, double omega0_l32,
                                 double C, double p,
                                 const std::vector<double>& d3v3_htheta = {},
                                 const std::vector<double>& grad_d3v3_htheta = {});

} // namespace critnorm
