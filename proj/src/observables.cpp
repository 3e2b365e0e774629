#include "fnls/observables.hpp"
#include "fnls/exponents.hpp"
#include "fnls/fft.hpp"
#include "fnls/spectral.hpp"
#include "fnls/symbols.hpp"

#include <cmath>

namespace fnls {

double mass(const ComplexField& u) { return u.values().abs2().sum() * u.grid().cell_volume(); }

double energy(const ComplexField& u, double sigma, int mu, double p, double nu)
{
    if (!(p > 1.0))
        throw std::invalid_argument("nonlinearity power must exceed 1");
    const Grid& g = u.grid();
    const double n = static_cast<double>(g.size());
    const Eigen::ArrayXcd m = evaluate_symbol(riesz(sigma), g);
    const double kinetic = 0.5 * std::pow(nu, 2.0 * sigma) * (m.abs2() * fft::forward(u).abs2()).sum()
                           * g.volume() / (n * n);
    const double potential = mu / (p + 1.0) * u.values().abs().pow(p + 1.0).sum() * g.cell_volume();
    return kinetic + potential;
}

std::string to_string(NormVariant v) { return v == NormVariant::Plain ? "plain" : "tilde"; }

NormVariant parse_norm_variant(const std::string& s)
{
    if (s == "plain" || s == "PLAIN")
        return NormVariant::Plain;
    if (s == "tilde" || s == "TILDE")
        return NormVariant::Tilde;
    throw std::invalid_argument("unknown norm variant: " + s);
}

namespace {

double time_norm(const std::vector<double>& t, const std::vector<double>& f, double q)
{
    if (std::isinf(q)) {
        double m = 0.0;
        for (double x : f)
            m = std::max(m, x);
        return m;
    }
    double acc = 0.0;
    for (std::size_t i = 1; i < t.size(); ++i)
        acc += 0.5 * (t[i] - t[i - 1]) * (std::pow(f[i], q) + std::pow(f[i - 1], q));
    return std::pow(acc, 1.0 / q);
}

double plain_norm(const Trajectory& traj, const SymbolSpec& weight, double q, double r)
{
    if (traj.fields.empty())
        return 0.0;
    const Eigen::ArrayXcd m = evaluate_symbol(weight, traj.fields.front().grid());
    std::vector<double> f;
    f.reserve(traj.size());
    for (const auto& u : traj.fields)
        f.push_back(lebesgue_norm(apply_multiplier(u, m), r));
    return time_norm(traj.times, f, q);
}

double sobolev_distance(const ComplexField& a, const ComplexField& b, double s)
{
    return sobolev_norm(a - b, s, 2.0, Homogeneity::Inhomogeneous);
}

} // namespace

double spacetime_norm(const Trajectory& traj, const SpacetimeNormSpec& spec)
{
    const int d = traj.params.d;
    if (!is_admissible(spec.q, spec.r, d))
        throw Error("inadmissible exponent pair");
    const SymbolSpec weight = strichartz_weight(spec.s, spec.r, spec.sigma, d);
    if (spec.variant == NormVariant::Plain)
        return plain_norm(traj, weight, spec.q, spec.r);
    if (traj.fields.empty())
        return 0.0;
    double acc = 0.0;
    for (double N : dyadic_scales(traj.fields.front().grid())) {
        const double b = plain_norm(traj, product({weight, lp_cutoff(N)}), spec.q, spec.r);
        acc += b * b;
    }
    return std::sqrt(acc);
}

double scattering_distance_direct(const Trajectory& traj, std::size_t i, std::size_t j, double sigma)
{
    const double s_c = critical_exponents(traj.params.d, traj.params.p, sigma).s_c;
    const ComplexField wi = linear_propagate(traj.fields.at(i), -traj.times.at(i), sigma, 1.0);
    const ComplexField wj = linear_propagate(traj.fields.at(j), -traj.times.at(j), sigma, 1.0);
    return sobolev_distance(wi, wj, s_c);
}

double scattering_distance(const Trajectory& traj, std::size_t i, std::size_t j, double sigma)
{
    if (traj.duhamel && traj.params.nu == 1.0 && traj.params.sigma == sigma) {
        const double s_c = critical_exponents(traj.params.d, traj.params.p, sigma).s_c;
        return sobolev_distance(traj.duhamel->at(i), traj.duhamel->at(j), s_c);
    }
    return scattering_distance_direct(traj, i, j, sigma);
}

std::vector<double> scattering_defect(const Trajectory& traj, double sigma)
{
    std::vector<double> out;
    for (std::size_t i = 1; i < traj.size(); ++i)
        out.push_back(scattering_distance(traj, i - 1, i, sigma));
    return out;
}

} // namespace fnls
