#pragma once

#include <vector>

#include "hyperlap/hypergraph.hpp"
#include "hyperlap/laplacian.hpp"

namespace hyperlap {

/// Per-step trajectory diagnostics, all evaluated at the stored state.
struct StepDiagnostics {
    double rayleigh = 0.0;           // D^(x_t) = D_w(f_t)
    double norm2_w = 0.0;            // ||f||_w^2
    double dirichlet_w = 0.0;        // <f, L_w f>_w
    double lap_norm2_w = 0.0;        // ||L_w f||_w^2
    double l1_to_equilibrium = 0.0;  // ||phi_t - phi_t*||_1
};

struct Trajectory {
    std::vector<double> times;
    std::vector<Vec> measures;  // measure-space states
    std::vector<StepDiagnostics> diagnostics;
};

struct SimulateOptions {
    double t_end = 1.0;
    double dt_max = 0.0;  // 0: auto (1e-3 scaled by the initial Rayleigh quotient)
    double tol = kDefaultTol;
    bool event_guard = true;  // shrink steps so distinct values never cross mid-step
    int record_stride = 1;    // keep every k-th step (first and last always kept)
};

/// Integrate d phi / dt = -L phi by explicit Euler.  With the event guard on,
/// a step is shortened so that two currently-distinct f values can at most
/// meet at the step end, never swap order strictly inside a step.  Steps
/// below 1e-15 abort with a diagnostic dump (std::runtime_error).
Trajectory simulate(const Hypergraph& h, const StateVector& phi0, const SimulateOptions& opts);

struct DerivativeCheck {
    double finite_difference = 0.0;
    double analytic = 0.0;
    double rel_error = 0.0;
};

/// First-order identities along the diffusion, checked with a single Euler
/// step of size h against the closed-form right-hand derivatives:
///   d||f||_w^2/dt      = -2 <f, L_w f>_w
///   d<f, L_w f>_w/dt   = -2 ||L_w f||_w^2
///   d Rayleigh/dt      = -(2/||f||_w^4)(||f||_w^2 ||L_w f||_w^2 - <f, L_w f>_w^2)
struct DerivativeReport {
    DerivativeCheck norm_derivative;
    DerivativeCheck dirichlet_derivative;
    DerivativeCheck rayleigh_derivative;
    double max_rel_error() const;
};

DerivativeReport derivative_checks(const Hypergraph& h, const StateVector& f, double h_step = 1e-6,
                                   double tol = kDefaultTol);

struct MixingResult {
    double t_mix = 0.0;   // first simulated time with ||phi_t - phi*||_1 <= delta
    double bound = 0.0;   // (1/gamma2) log(1/(delta sqrt(phi*_min)))
    double gamma2 = 0.0;  // the value used for the bound
};

/// Measure the mixing time of a probability measure phi0 to within l1
/// distance delta, against the spectral upper bound.  gamma2 must be supplied
/// (compute it with the spectral solver).  Throws std::invalid_argument if
/// phi0 is not a probability measure.
MixingResult mixing_time(const Hypergraph& h, const StateVector& phi0, double delta,
                         double gamma2, double dt_max = 1e-3, double tol = kDefaultTol);

}  // namespace hyperlap
