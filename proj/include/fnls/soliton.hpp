#ifndef FNLS_SOLITON_HPP
#define FNLS_SOLITON_HPP

#include "fnls/grid.hpp"
#include "fnls/profile.hpp"

#include <vector>

namespace fnls {

struct SolitonConfig
{
    /// mu = -1 is the attractive sign in i u_t + (-Delta)^sigma u + mu |u|^{p-1} u = 0
    /// that the profile equation P_v Q + omega^{2 sigma} Q - |Q|^{p-1} Q = 0 corresponds to.
    ModelParams params{1, 0.75, 3.0, -1, 1.0};
    double omega = 1.0;
    Eigen::VectorXd v = Eigen::VectorXd::Zero(1);
    double gamma = 0.0; // 0 selects p/(p-1)
    int max_iter = 200;
    double tol = 1e-8;
    double L = 2.0 * kPi * 16.0;
    Index n = 512;
    /// iterations without a 1% improvement of the best residual before giving up
    int plateau_window = 30;

    Grid grid() const;
    double effective_gamma() const;
};

struct SolitonResult
{
    explicit SolitonResult(ComplexField q) : Q(std::move(q)) {}

    ComplexField Q;
    Eigen::VectorXd v; // lattice-rounded velocity actually used
    std::vector<double> residual_history;
    std::vector<double> stabilization_factor_history;
    double min_symbol = 0.0; // min over the lattice of p_v + omega^{2 sigma}
    bool converged = false;
    int iterations = 0;
};

/// Default seed: Gaussian of width 1/omega.
ProfileSpec default_soliton_seed(const SolitonConfig& cfg);

/**
 * Q <- M^gamma (p_v + omega^{2 sigma})^{-1} [|Q|^{p-1} Q],
 * M = <(p_v + omega^{2 sigma}) Q, Q> / <|Q|^{p-1} Q, Q>.
 * Throws Error("symbol not coercive") or Error("stagnation").
 */
SolitonResult petviashvili_solve(const SolitonConfig& cfg, const ProfileSpec& seed);
SolitonResult petviashvili_solve(const SolitonConfig& cfg, const ComplexField& seed);

/// ||(p_v + omega^{2 sigma}) Q - |Q|^{p-1} Q||_{L^2} / ||Q||_{L^2}; 0 for Q = 0.
double soliton_residual(const ComplexField& Q, const SolitonConfig& cfg);

/// Evolves e^{-i v.x} Q and compares with e^{it(|v|^{2s} - omega^{2s})} e^{-iv.x} Q(x - 2 t s |v|^{2s-2} v);
/// returns the relative L^2 mismatch at t_end.
double traveling_wave_check(const SolitonResult& result, const SolitonConfig& cfg, double t_end, double dt);

} // namespace fnls

#endif // FNLS_SOLITON_HPP
