#pragma once

#include <functional>
#include <vector>

#include "critnorm/vorticity.hpp"

namespace critnorm {

/// Thrown when a step produces non-finite values; carries the last valid
/// state.  The CLI maps it to exit code 3.
class BlowupSuspected : public std::runtime_error {
  public:
    BlowupSuspected(VelocityState last, double t)
        : std::runtime_error("blow-up suspected: non-finite state at t = " + std::to_string(t)),
          last_valid(std::move(last)) {}
    VelocityState last_valid;
};

struct SolverConfig {
    double nu = 1.0;      // unit viscosity of the nondimensional system
    double dt = 1e-3;
    double t_end = 0.5;
    int snapshot_cadence = 5; // snapshot every N steps
    // Integrating-factor RK4 with the 2/3 rule is the only scheme; both are
    // part of the contract (exact viscous decay, alias-free products).
};

struct StepInfo {
    double max_speed = 0.0;
    bool cfl_ok = true; // advisory dt <= 0.5 dx / max|v|
};

/// Leray-projected, dealiased nonlinear term -P[(v.grad)v] in rotational
/// form P[v x Omega]; the gradient part of the rotational identity is
/// absorbed by the projection.
std::array<SpectralField, 3> nonlinear_term(const VelocityState& v, double* max_speed = nullptr);

/// Full instantaneous tendency dv/dt = nu lap v + nonlinear_term(v).
std::array<SpectralField, 3> ns_tendency(const VelocityState& v, double nu = 1.0);

/// Pressure with zero mean: Pi_hat = (sum_{l,m} d_l v^m d_m v^l)_hat / |k|^2.
SpectralField pressure(const VelocityState& v);

/// One integrating-factor RK4 step; exact e^{-nu|k|^2 dt} decay for zero
/// nonlinearity.  Throws BlowupSuspected on non-finite output.
VelocityState step(const VelocityState& state, const SolverConfig& cfg, StepInfo* info = nullptr);

/// Residuals of the two-unknown reformulation evaluated at a snapshot,
/// given the instantaneous tendency of the full system:
///   r_omega = [dt omega + v.grad omega - lap omega]
///             - [d3v3 omega + d2v3 d3v1 - d1v3 d3v2]
///   r_d3v3  = [dt d3v3 + v.grad d3v3 - lap d3v3 + d3v.grad v3]
///             - (k3^2/|k|^2)(sum_{l,m} d_l v^m d_m v^l)
struct TildeNsResidual {
    SpectralField r_omega;
    SpectralField r_d3v3;
    double rel_omega = 0.0; // max residual coeff over the scale of the terms
    double rel_d3v3 = 0.0;
};
TildeNsResidual tilde_ns_residual(const VelocityState& state,
                                  const std::array<SpectralField, 3>& dvdt, double nu = 1.0);

/// Instantaneous integrands of the three F-terms driving the L^{3/2}
/// vorticity estimate:
///   F1 = int d3v3 |omega|^{3/2},
///   F2 = int (d2v3 d3v_curl^1 - d1v3 d3v_curl^2) omega_{1/2},
///   F3 = the v_div analog.
/// The k_h = 0 shear residual of v^h is counted with the forcing family F3.
struct FTerms {
    double F1 = 0.0, F2 = 0.0, F3 = 0.0;
    double full = 0.0; // int F . omega_{1/2} with the full right-hand side
    double sum() const { return F1 + F2 + F3; }
};
FTerms f_terms(const VelocityState& v);

/// H_theta inner products (Q_n(v,v) | d3v3) of the three quadratic terms in
/// the d3v3 energy budget; along exact dynamics their sum equals
/// -(d/dt (1/2)||d3v3||^2_{H_theta} + nu ||grad d3v3||^2_{H_theta}).
struct QTerms {
    double Q1 = 0.0, Q2 = 0.0, Q3 = 0.0;
    double sum() const { return Q1 + Q2 + Q3; }
};
QTerms q_terms(const VelocityState& v, double theta);

struct Trajectory {
    SolverConfig config;
    std::vector<VelocityState> snapshots;
    std::vector<double> step_times;  // t_n for every step taken (t0 first)
    std::vector<double> energy;      // (1/2)||v(t_n)||_{L^2}^2 per step
    std::vector<double> dissipation; // ||grad v(t_n)||_{L^2}^2 per step
    int cfl_warnings = 0;

    /// integral of the dissipation samples by composite Simpson.
    double dissipation_integral(std::size_t upto) const;
    /// max_n |E_n + nu * int_0^n - E_0| / E_0 over the run.
    double energy_identity_residual() const;
};

/// Advances initial data to t_end, collecting snapshots every
/// snapshot_cadence steps (the initial and final states always included).
/// on_snapshot, when set, runs for each collected snapshot in time order.
Trajectory integrate(const VelocityState& initial, const SolverConfig& cfg,
                     const std::function<void(const VelocityState&)>& on_snapshot = {});

double energy_half_l2sq(const VelocityState& v);
double enstrophy_gradsq(const VelocityState& v);

} // namespace critnorm
