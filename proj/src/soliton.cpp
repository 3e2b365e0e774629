#include "fnls/soliton.hpp"
#include "fnls/evolution.hpp"
#include "fnls/fft.hpp"
#include "fnls/spectral.hpp"
#include "fnls/symbols.hpp"

#include <cmath>

namespace fnls {

namespace {

Eigen::ArrayXd linear_symbol(const SolitonConfig& cfg, const Grid& grid, const Eigen::VectorXd& v)
{
    return evaluate_symbol(soliton_symbol(v, cfg.params.sigma), grid).real()
           + std::pow(cfg.omega, 2.0 * cfg.params.sigma);
}

Eigen::ArrayXcd nonlinearity(const Eigen::ArrayXcd& q, double p)
{
    return q * q.abs().pow(p - 1.0);
}

void check_config(const SolitonConfig& cfg)
{
    cfg.params.validate();
    if (!(cfg.omega > 0.0))
        throw std::invalid_argument("omega must be positive");
    const double g = cfg.effective_gamma();
    if (!(g > 1.0 && g < cfg.params.p))
        throw std::invalid_argument("gamma must lie in (1, p)");
    if (cfg.max_iter < 1)
        throw std::invalid_argument("max_iter must be >= 1");
}

} // namespace

Grid SolitonConfig::grid() const { return Grid::cube(params.d, n, L); }

double SolitonConfig::effective_gamma() const { return gamma > 0.0 ? gamma : params.p / (params.p - 1.0); }

ProfileSpec default_soliton_seed(const SolitonConfig& cfg) { return ProfileSpec::gaussian(1.0 / cfg.omega); }

SolitonResult petviashvili_solve(const SolitonConfig& cfg, const ProfileSpec& seed)
{
    return petviashvili_solve(cfg, sample_profile(seed, cfg.grid(), -1.0));
}

SolitonResult petviashvili_solve(const SolitonConfig& cfg, const ComplexField& seed)
{
    check_config(cfg);
    const Grid& grid = seed.grid();
    SolitonResult res(seed);
    res.v = round_to_lattice(cfg.v, grid);
    const Eigen::ArrayXd Ls = linear_symbol(cfg, grid, res.v);
    res.min_symbol = Ls.minCoeff();
    if (!(res.min_symbol > 0.0))
        throw Error("symbol not coercive");

    const double p = cfg.params.p;
    const double gamma = cfg.effective_gamma();
    Eigen::ArrayXcd q = seed.values();
    double best = std::numeric_limits<double>::infinity();
    int since_best = 0;
    for (int it = 1; it <= cfg.max_iter; ++it) {
        const Eigen::ArrayXcd qh = fft::forward(ComplexField(grid, q));
        const Eigen::ArrayXcd nh = fft::forward(ComplexField(grid, nonlinearity(q, p)));
        const double num = (Ls * qh.abs2()).sum();
        const double den = (nh * qh.conjugate()).real().sum();
        if (!(den > 0.0) || !std::isfinite(num))
            throw Error("stagnation");
        const double M = num / den;
        q = fft::inverse(grid, std::pow(M, gamma) * nh / Ls.cast<Complex>()).values();

        const ComplexField Q(grid, q);
        const double r = soliton_residual(Q, cfg);
        res.residual_history.push_back(r);
        res.stabilization_factor_history.push_back(M);
        res.iterations = it;
        if (!std::isfinite(r))
            throw Error("stagnation");
        if (r < cfg.tol) {
            res.converged = true;
            break;
        }
        if (r < 0.99 * best) {
            best = r;
            since_best = 0;
        } else if (++since_best >= cfg.plateau_window) {
            throw Error("stagnation");
        }
    }
    res.Q.values() = q;
    return res;
}

double soliton_residual(const ComplexField& Q, const SolitonConfig& cfg)
{
    const double qn = lebesgue_norm(Q, 2.0);
    if (qn == 0.0)
        return 0.0;
    const Eigen::VectorXd v = round_to_lattice(cfg.v, Q.grid());
    const Eigen::ArrayXd Ls = linear_symbol(cfg, Q.grid(), v);
    ComplexField r = apply_multiplier(Q, Eigen::ArrayXcd(Ls.cast<Complex>()));
    r.values() -= nonlinearity(Q.values(), cfg.params.p);
    return lebesgue_norm(r, 2.0) / qn;
}

double traveling_wave_check(const SolitonResult& result, const SolitonConfig& cfg, double t_end, double dt)
{
    if (!result.converged)
        throw std::invalid_argument("traveling-wave check needs a converged profile");
    const double s = cfg.params.sigma;
    const Eigen::VectorXd& v = result.v;
    const double vn = v.norm();
    const Eigen::VectorXd c =
        vn > 0.0 ? Eigen::VectorXd(2.0 * s * std::pow(vn, 2.0 * s - 2.0) * v) : Eigen::VectorXd::Zero(v.size());

    EvolveConfig ec;
    ec.params = cfg.params;
    ec.t_end = t_end;
    ec.dt = dt;
    ec.snapshot_stride = std::numeric_limits<Index>::max();
    const ComplexField u = evolve(modulate(result.Q, v), ec).final_field();
    const ComplexField exact = std::polar(1.0, t_end * (std::pow(vn, 2.0 * s) - std::pow(cfg.omega, 2.0 * s)))
                               * modulate(spatial_shift(result.Q, c * t_end), v);
    return lebesgue_norm(u - exact, 2.0) / lebesgue_norm(exact, 2.0);
}

} // namespace fnls
