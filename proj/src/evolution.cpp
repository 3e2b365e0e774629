#include "fnls/evolution.hpp"
#include "fnls/fft.hpp"
#include "fnls/observables.hpp"
#include "fnls/spectral.hpp"
#include "fnls/symbols.hpp"

#include <cmath>

namespace fnls {

namespace {

/// nu^{2 sigma} |xi|^{2 sigma} on the lattice
Eigen::ArrayXd dispersion_relation(const Grid& grid, double sigma, double nu)
{
    const double c = std::pow(nu, 2.0 * sigma);
    Eigen::ArrayXd out(grid.size());
    grid.for_each_frequency([&](Index flat, const std::array<double, 3>& xi) {
        out[flat] = c * std::pow(std::sqrt(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]), 2.0 * sigma);
    });
    return out;
}

Eigen::ArrayXcd phase_factor(const Eigen::ArrayXd& omega, double t)
{
    return (Complex(0.0, t) * omega.cast<Complex>()).exp();
}

/// |u|^{p-1} pointwise with 0 at u = 0
Eigen::ArrayXd nonlinear_weight(const Eigen::ArrayXcd& u, double p)
{
    const double e = p - 1.0;
    const double half = 0.5 * e;
    Eigen::ArrayXd out(u.size());
    if (half == std::round(half)) {
        // even integer p - 1: a power of |u|^2, no logarithm needed
        const int k = static_cast<int>(half);
        for (Index i = 0; i < u.size(); ++i) {
            const double a2 = std::norm(u[i]);
            double w = 1.0;
            for (int j = 0; j < k; ++j)
                w *= a2;
            out[i] = w;
        }
        return out;
    }
    for (Index i = 0; i < u.size(); ++i) {
        const double a = std::abs(u[i]);
        out[i] = a > 0.0 ? std::exp(e * std::log(a)) : 0.0;
    }
    return out;
}

Eigen::ArrayXcd rotate(const Eigen::ArrayXcd& u, double t, int mu, double p)
{
    const Eigen::ArrayXd w = nonlinear_weight(u, p);
    Eigen::ArrayXcd out(u.size());
    for (Index i = 0; i < u.size(); ++i)
        out[i] = u[i] * std::polar(1.0, t * mu * w[i]);
    return out;
}

/// Reusable half-step propagator for one grid and one dt.
class Stepper
{
public:
    Stepper(const Grid& grid, const ModelParams& params)
        : grid_(grid), params_(params), omega_(dispersion_relation(grid, params.sigma, params.nu))
    {
    }

    const Eigen::ArrayXd& omega() const { return omega_; }

    /// y (e^{i dt mu |y|^{p-1}} - 1), written as -2 sin^2(th/2) + i sin(th) to avoid cancellation
    Eigen::ArrayXcd increment(const Eigen::ArrayXcd& y) const
    {
        const Eigen::ArrayXd w = nonlinear_weight(y, params_.p);
        Eigen::ArrayXcd inc(y.size());
        for (Index i = 0; i < y.size(); ++i) {
            const double th = dt_ * params_.mu * w[i];
            const double sh = std::sin(0.5 * th);
            inc[i] = y[i] * Complex(-2.0 * sh * sh, std::sin(th));
        }
        return inc;
    }

    void set_dt(double dt)
    {
        if (dt == dt_)
            return;
        dt_ = dt;
        half_ = phase_factor(omega_, 0.5 * dt);
    }

    /// One step. When `inc_hat` is given it receives the spectrum of the
    /// nonlinear increment y (e^{i dt mu |y|^{p-1}} - 1), y = L(dt/2) u.
    Eigen::ArrayXcd step(const Eigen::ArrayXcd& u, Eigen::ArrayXcd* inc_hat)
    {
        if (params_.nu == 0.0) {
            if (inc_hat == nullptr)
                return rotate(u, dt_, params_.mu, params_.p);
            const Eigen::ArrayXcd inc = increment(u);
            *inc_hat = fft::forward(ComplexField(grid_, inc));
            return u + inc;
        }
        Eigen::ArrayXcd spec = fft::forward(ComplexField(grid_, u)) * half_;
        ComplexField y = fft::inverse(grid_, spec);
        if (inc_hat != nullptr) {
            *inc_hat = fft::forward(ComplexField(grid_, increment(y.values())));
            spec = (fft::forward(y) + *inc_hat) * half_;
        } else {
            spec = fft::forward(ComplexField(grid_, rotate(y.values(), dt_, params_.mu, params_.p))) * half_;
        }
        return fft::inverse(grid_, spec).values();
    }

private:
    Grid grid_;
    ModelParams params_;
    Eigen::ArrayXd omega_;
    double dt_ = std::numeric_limits<double>::quiet_NaN();
    Eigen::ArrayXcd half_;
};

} // namespace

ComplexField linear_propagate(const ComplexField& u, double t, double sigma, double nu)
{
    if (t == 0.0 || nu == 0.0)
        return u;
    return apply_multiplier(u, phase_factor(dispersion_relation(u.grid(), sigma, nu), t));
}

ComplexField nonlinear_phase(const ComplexField& u, double t, int mu, double p)
{
    if (!(p > 1.0))
        throw std::invalid_argument("nonlinearity power must exceed 1");
    return ComplexField(u.grid(), rotate(u.values(), t, mu, p));
}

ComplexField strang_step(const ComplexField& u, double dt, const ModelParams& params)
{
    params.validate();
    Stepper s(u.grid(), params);
    s.set_dt(dt);
    return ComplexField(u.grid(), s.step(u.values(), nullptr));
}

double default_dt(const Grid& grid, double sigma, double t_end)
{
    const double dt = 0.1 * std::pow(grid.min_spacing(), 2.0 * sigma);
    return t_end > 0.0 ? std::min(dt, t_end / 100.0) : dt;
}

std::size_t Trajectory::index_near(double t) const
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < times.size(); ++i)
        if (std::abs(times[i] - t) < std::abs(times[best] - t))
            best = i;
    return best;
}

Trajectory evolve(const ComplexField& u0, const EvolveConfig& cfg)
{
    cfg.params.validate();
    if (u0.grid().dim() != cfg.params.d)
        throw std::invalid_argument("initial field dimension does not match the model");
    if (!(cfg.t_end >= 0.0))
        throw std::invalid_argument("t_end must be non-negative");
    if (cfg.snapshot_stride < 1)
        throw std::invalid_argument("snapshot stride must be >= 1");
    u0.require_finite();
    const double dt = cfg.dt > 0.0 ? cfg.dt : default_dt(u0.grid(), cfg.params.sigma, cfg.t_end);
    if (cfg.dt < 0.0)
        throw std::invalid_argument("dt must be positive");
    if (cfg.t_end > 0.0 && dt > cfg.t_end)
        throw std::invalid_argument("dt exceeds t_end");

    const Grid& grid = u0.grid();
    const ModelParams& mp = cfg.params;
    Trajectory traj;
    traj.params = mp;
    traj.dt = dt;
    traj.snapshot_stride = cfg.snapshot_stride;

    const double m0 = mass(u0);
    auto record = [&](double t, const ComplexField& u) {
        traj.times.push_back(t);
        traj.fields.push_back(u);
        traj.diagnostics.push_back({mass(u), energy(u, mp.sigma, mp.mu, mp.p, mp.nu)});
    };
    record(0.0, u0);

    Stepper stepper(grid, mp);
    Eigen::ArrayXcd duhamel_hat;
    if (cfg.track_duhamel) {
        duhamel_hat = Eigen::ArrayXcd::Zero(grid.size());
        traj.duhamel.emplace();
        traj.duhamel->push_back(ComplexField(grid));
    }

    Index steps = 0;
    if (cfg.t_end > 0.0)
        steps = static_cast<Index>(std::ceil(cfg.t_end / dt - 1e-9));
    Eigen::ArrayXcd u = u0.values();
    Eigen::ArrayXcd inc_hat;
    for (Index n = 0; n < steps; ++n) {
        const double t_n = n * dt;
        const double h = n + 1 == steps ? cfg.t_end - t_n : dt;
        stepper.set_dt(h);
        u = stepper.step(u, cfg.track_duhamel ? &inc_hat : nullptr);
        if (!u.real().allFinite() || !u.imag().allFinite())
            throw Error("nonfinite field");
        if (cfg.track_duhamel) {
            const double tau = t_n + 0.5 * h;
            duhamel_hat += phase_factor(stepper.omega(), -tau) * inc_hat;
        }
        const double m = u.abs2().sum() * grid.cell_volume();
        if (m0 > 0.0 ? std::abs(m - m0) / m0 > cfg.mass_drift_guard : m > cfg.mass_drift_guard)
            throw Error("mass drift guard tripped");
        const bool last = n + 1 == steps;
        if (last || (n + 1) % cfg.snapshot_stride == 0) {
            const double t = last ? cfg.t_end : (n + 1) * dt;
            record(t, ComplexField(grid, u));
            if (cfg.track_duhamel)
                traj.duhamel->push_back(fft::inverse(grid, duhamel_hat));
        }
    }
    return traj;
}

ComplexField scaling_transform(const ComplexField& u, double lambda, const ModelParams& params,
                               const std::optional<std::vector<Index>>& target_points)
{
    if (!(lambda > 0.0))
        throw std::invalid_argument("scaling factor must be positive");
    const double e = std::log2(lambda);
    if (std::abs(e - std::round(e)) > 1e-12)
        throw std::invalid_argument("scaling factor must be a power of two");
    ComplexField out = dilate(u, lambda);
    out *= Complex(std::pow(lambda, -2.0 * params.sigma / (params.p - 1.0)), 0.0);
    if (target_points)
        out = resample(out, *target_points);
    return out;
}

double scaling_time_map(double t, double lambda, double sigma) { return t / std::pow(lambda, 2.0 * sigma); }

} // namespace fnls
