#pragma once

#include <cstdint>
#include <vector>

#include "hyperlap/diffusion.hpp"
#include "hyperlap/hypergraph.hpp"

namespace hyperlap {

struct SdeConfig {
    double eta = 0.0;        // Brownian noise rate; node u gets variance eta * w_u per unit time
    double dt = 1e-3;
    double t_end = 1.0;
    int n_trajectories = 1;
    std::uint64_t seed = 0;  // substream for trajectory i is seed XOR i
    double tol = kDefaultTol;
};

/// One Euler-Maruyama path of d Phi = -L Phi dt + sqrt(eta) W^1/2 dB.
/// Bit-reproducible for fixed (seed, config, instance); with eta = 0 the
/// noise term is skipped entirely, so the path equals the deterministic
/// fixed-step Euler path with the same dt bit for bit.
Trajectory simulate_sde(const Hypergraph& h, const StateVector& phi0, const SdeConfig& cfg,
                        int trajectory_index = 0, int record_stride = 1);

struct CheckpointStats {
    double time = 0.0;
    // ||Phi_t - Phi_t*||_1 across the ensemble
    double l1_mean = 0.0, l1_variance = 0.0, l1_q50 = 0.0, l1_q90 = 0.0;
    // ||Pi X_t||_2^2 across the ensemble
    double proj2_mean = 0.0, proj2_variance = 0.0, proj2_q50 = 0.0, proj2_q90 = 0.0;
    // Dominating law e^{-g t} Pi X_0 + sqrt(eta(1-e^{-2gt})/(2g)) N(0,1)^V:
    // exact second moment and Monte-Carlo quantiles of ||X^_t||_2.
    double dom_mean_sq = 0.0, dom_q50 = 0.0, dom_q90 = 0.0;
};

struct EnsembleStats {
    std::vector<CheckpointStats> checkpoints;
    double dominance_scale = 0.0;  // eta * w(V) / (2 gamma2)
    double gamma2 = 0.0;
    int n_trajectories = 0;
    // Total-measure increment M_T - M_0 per trajectory: its law is
    // N(0, eta * t_end * w(V)).
    double measure_increment_mean = 0.0;
    double measure_increment_variance = 0.0;
};

/// Run cfg.n_trajectories independent paths and collect order statistics at
/// the checkpoint times (snapped to step multiples).  Aggregation order is
/// fixed by trajectory index, so results are reproducible under parallelism.
EnsembleStats ensemble_stats(const Hypergraph& h, const StateVector& phi0, const SdeConfig& cfg,
                             const std::vector<double>& checkpoints, double gamma2);

}  // namespace hyperlap
