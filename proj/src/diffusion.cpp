#include "hyperlap/diffusion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hyperlap {

namespace {

StepDiagnostics diagnostics_at(const Hypergraph& h, const Vec& phi, const Vec& f, const Vec& r) {
    const Vec& w = h.node_weights();
    StepDiagnostics d;
    d.norm2_w = dot_w(w, f, f);
    d.dirichlet_w = -dot_w(w, f, r);  // L_w f = -r
    d.lap_norm2_w = dot_w(w, r, r);
    d.rayleigh = d.norm2_w > 0.0 ? d.dirichlet_w / d.norm2_w : 0.0;
    const double rate = sum(phi) / h.total_weight();
    double l1 = 0.0;
    for (int u = 0; u < h.node_count(); ++u) l1 += std::abs(phi[u] - rate * w[u]);
    d.l1_to_equilibrium = l1;
    return d;
}

/// Largest step <= dt such that no pair of currently-distinct f values
/// strictly crosses before the step end (they may land exactly on equality).
double guard_step(const Vec& f, const Vec& r, double dt, double tol) {
    const std::size_t n = f.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double gap = f[i] - f[j];
            if (gap <= tol) continue;           // same snapped value: nothing to cross
            const double closing = r[j] - r[i];  // j catching up with i
            if (closing <= 0.0) continue;
            const double t_meet = gap / closing;
            if (t_meet < dt) dt = t_meet;
        }
    }
    return dt;
}

}  // namespace

Trajectory simulate(const Hypergraph& h, const StateVector& phi0, const SimulateOptions& opts) {
    if (!(opts.t_end > 0.0)) throw std::invalid_argument("simulate: t_end must be positive");
    const Vec& w = h.node_weights();
    Vec phi = convert(h, phi0, Space::Measure).values;
    const int n = h.node_count();

    Vec f(n), r(n);
    auto refresh_f = [&]() {
        for (int u = 0; u < n; ++u) f[u] = phi[u] / w[u];
    };
    refresh_f();

    double dt_max = opts.dt_max;
    if (dt_max <= 0.0) {
        // Stiffer states (larger Rayleigh quotient) get smaller default steps.
        double r0 = 0.0;
        if (!is_zero(f)) r0 = rayleigh_quotient(h, StateVector{Space::Weighted, f}, opts.tol);
        dt_max = 1e-3 / std::max(1.0, r0);
    }

    Trajectory traj;
    double t = 0.0;
    int step_index = 0;
    auto record = [&](bool force) {
        if (!force && opts.record_stride > 1 && step_index % opts.record_stride != 0) return;
        traj.times.push_back(t);
        traj.measures.push_back(phi);
        traj.diagnostics.push_back(diagnostics_at(h, phi, f, r));
    };

    operator_rates(h, f, opts.tol, r);
    record(true);
    while (t < opts.t_end) {
        double dt = std::min(dt_max, opts.t_end - t);
        if (opts.event_guard) dt = guard_step(f, r, dt, opts.tol);
        if (dt < 1e-15) {
            std::ostringstream msg;
            msg << "simulate: step underflow at t=" << t << " (dt=" << dt << "); f=[";
            for (int u = 0; u < n; ++u) msg << f[u] << (u + 1 < n ? "," : "]");
            msg << " r=[";
            for (int u = 0; u < n; ++u) msg << r[u] << (u + 1 < n ? "," : "]");
            throw std::runtime_error(msg.str());
        }
        for (int u = 0; u < n; ++u) phi[u] += dt * w[u] * r[u];  // dphi/dt = W r
        t += dt;
        ++step_index;
        refresh_f();
        operator_rates(h, f, opts.tol, r);
        record(t >= opts.t_end);
    }
    return traj;
}

double DerivativeReport::max_rel_error() const {
    return std::max({norm_derivative.rel_error, dirichlet_derivative.rel_error,
                     rayleigh_derivative.rel_error});
}

DerivativeReport derivative_checks(const Hypergraph& h, const StateVector& v, double h_step,
                                   double tol) {
    const Vec f = convert(h, v, Space::Weighted).values;
    if (is_zero(f)) throw std::invalid_argument("derivative_checks: zero vector");
    const Vec& w = h.node_weights();

    Vec r;
    operator_rates(h, f, tol, r);
    Vec f1 = f;
    axpy(f1, h_step, r);  // one Euler step
    Vec r1;
    operator_rates(h, f1, tol, r1);

    const double norm0 = dot_w(w, f, f), norm1v = dot_w(w, f1, f1);
    const double dir0 = -dot_w(w, f, r), dir1 = -dot_w(w, f1, r1);
    const double lap0 = dot_w(w, r, r);

    auto rel = [](double fd, double an) {
        return std::abs(fd - an) / std::max(1.0, std::abs(an));
    };

    DerivativeReport rep;
    rep.norm_derivative.finite_difference = (norm1v - norm0) / h_step;
    rep.norm_derivative.analytic = -2.0 * dir0;
    rep.norm_derivative.rel_error =
        rel(rep.norm_derivative.finite_difference, rep.norm_derivative.analytic);

    rep.dirichlet_derivative.finite_difference = (dir1 - dir0) / h_step;
    rep.dirichlet_derivative.analytic = -2.0 * lap0;
    rep.dirichlet_derivative.rel_error =
        rel(rep.dirichlet_derivative.finite_difference, rep.dirichlet_derivative.analytic);

    rep.rayleigh_derivative.finite_difference = (dir1 / norm1v - dir0 / norm0) / h_step;
    rep.rayleigh_derivative.analytic =
        -2.0 / (norm0 * norm0) * (norm0 * lap0 - dir0 * dir0);
    rep.rayleigh_derivative.rel_error =
        rel(rep.rayleigh_derivative.finite_difference, rep.rayleigh_derivative.analytic);
    return rep;
}

MixingResult mixing_time(const Hypergraph& h, const StateVector& phi0, double delta,
                         double gamma2, double dt_max, double tol) {
    if (!(delta > 0.0)) throw std::invalid_argument("mixing_time: delta must be positive");
    if (!(gamma2 > 0.0)) throw std::invalid_argument("mixing_time: gamma2 must be positive");
    const Vec p = convert(h, phi0, Space::Measure).values;
    double total = 0.0;
    for (double x : p) {
        if (x < 0.0) throw std::invalid_argument("mixing_time: phi0 must be nonnegative");
        total += x;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("mixing_time: phi0 must have total measure 1");

    const Vec& w = h.node_weights();
    double phi_star_min = std::numeric_limits<double>::infinity();
    for (int u = 0; u < h.node_count(); ++u)
        phi_star_min = std::min(phi_star_min, w[u] / h.total_weight());

    MixingResult res;
    res.gamma2 = gamma2;
    res.bound = (1.0 / gamma2) * std::log(1.0 / (delta * std::sqrt(phi_star_min)));

    auto l1_distance = [&](const Vec& phi) {
        double l1 = 0.0;
        for (int u = 0; u < h.node_count(); ++u)
            l1 += std::abs(phi[u] - w[u] / h.total_weight());
        return l1;
    };

    Vec phi = p, f(h.node_count()), r;
    if (l1_distance(phi) <= delta) {
        res.t_mix = 0.0;
        return res;
    }
    double t = 0.0;
    const double t_cap = 4.0 * res.bound + 1.0;
    while (t < t_cap) {
        for (int u = 0; u < h.node_count(); ++u) f[u] = phi[u] / w[u];
        operator_rates(h, f, tol, r);
        double dt = guard_step(f, r, dt_max, tol);
        if (dt < 1e-15) throw std::runtime_error("mixing_time: step underflow");
        for (int u = 0; u < h.node_count(); ++u) phi[u] += dt * w[u] * r[u];
        t += dt;
        if (l1_distance(phi) <= delta) {
            res.t_mix = t;
            return res;
        }
    }
    throw std::runtime_error("mixing_time: did not mix within 4x the spectral bound");
}

}  // namespace hyperlap
