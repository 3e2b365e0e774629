#ifndef FNLS_EVOLUTION_HPP
#define FNLS_EVOLUTION_HPP

#include "fnls/grid.hpp"

#include <optional>
#include <vector>

namespace fnls {

/// Exact linear flow: u_hat * exp(i t nu^{2 sigma} |xi|^{2 sigma}).
ComplexField linear_propagate(const ComplexField& u, double t, double sigma, double nu = 1.0);

/// Exact zero-dispersion flow: u * exp(i t mu |u|^{p-1}), with |0|^{p-1} = 0.
ComplexField nonlinear_phase(const ComplexField& u, double t, int mu, double p);

/// L(dt/2) N(dt) L(dt/2). A negative dt gives the exact inverse step.
ComplexField strang_step(const ComplexField& u, double dt, const ModelParams& params);

struct EvolveConfig
{
    ModelParams params;
    double t_end = 1.0;
    double dt = 0.0;           // 0 selects default_dt
    Index snapshot_stride = 1; // in steps
    double mass_drift_guard = 1e-8;
    /// Accumulate the Duhamel increment sum_n e^{-i tau_n L}[y_n (e^{i dt mu |y_n|^{p-1}} - 1)],
    /// which equals e^{-itL}u(t) - u0 without the cancellation of the direct difference.
    bool track_duhamel = false;
};

/// min(0.1 * dx^{2 sigma}, t_end / 100)
double default_dt(const Grid& grid, double sigma, double t_end);

struct Diagnostics
{
    double mass = 0.0;
    double energy = 0.0;
};

struct Trajectory
{
    ModelParams params;
    double dt = 0.0;
    Index snapshot_stride = 1;
    std::vector<double> times;
    std::vector<ComplexField> fields;
    std::vector<Diagnostics> diagnostics;
    /// Present when EvolveConfig::track_duhamel was set; one entry per snapshot.
    std::optional<std::vector<ComplexField>> duhamel;

    std::size_t size() const { return times.size(); }
    const ComplexField& final_field() const { return fields.back(); }
    /// Index of the snapshot whose time is closest to t.
    std::size_t index_near(double t) const;
};

/// Repeated Strang steps; the last step is shortened to land on t_end.
/// Throws Error("mass drift guard tripped") or Error("nonfinite field").
Trajectory evolve(const ComplexField& u0, const EvolveConfig& cfg);

/**
 * lambda^{-2 sigma/(p-1)} u(x / lambda) on the box of extent lambda * L.
 * lambda must be a power of two. By default the point count is kept (an exact
 * relabelling); `target_points` re-samples trigonometrically and may throw
 * Error("rescale aliasing").
 */
ComplexField scaling_transform(const ComplexField& u, double lambda, const ModelParams& params,
                               const std::optional<std::vector<Index>>& target_points = std::nullopt);

/// Companion time map: the scaled solution at time t corresponds to the
/// original one at t / lambda^{2 sigma}.
double scaling_time_map(double t, double lambda, double sigma);

} // namespace fnls

#endif // FNLS_EVOLUTION_HPP
