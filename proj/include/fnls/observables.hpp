#ifndef FNLS_OBSERVABLES_HPP
#define FNLS_OBSERVABLES_HPP

#include "fnls/evolution.hpp"
#include "fnls/grid.hpp"

#include <string>
#include <vector>

namespace fnls {

/// integral of |u|^2
double mass(const ComplexField& u);

/// integral of nu^{2 sigma}/2 ||grad|^sigma u|^2 + mu/(p+1) |u|^{p+1}; nu = 1 is the model energy.
double energy(const ComplexField& u, double sigma, int mu, double p, double nu = 1.0);

enum class NormVariant { Plain, Tilde };
enum class TimeQuadrature { Trapezoid };

std::string to_string(NormVariant v);
NormVariant parse_norm_variant(const std::string& s);

struct SpacetimeNormSpec
{
    double q = 4.0;
    double r = 0.0; // must be set; infinity allowed
    double s = 0.0;
    double sigma = 0.75;
    NormVariant variant = NormVariant::Plain;
    TimeQuadrature time_quadrature = TimeQuadrature::Trapezoid;
};

/**
 * PLAIN: L^q_t (trapezoid over snapshots, max for q = inf) of the W^{s,r}
 * norm of the Strichartz-weighted field. TILDE: l^2 over the resolvable
 * dyadic N of the PLAIN norm of the band-projected field.
 * Throws Error("inadmissible exponent pair").
 */
double spacetime_norm(const Trajectory& traj, const SpacetimeNormSpec& spec);

/// H^{s_c} distance between e^{-i t_i L} u(t_i) and e^{-i t_j L} u(t_j) (nu = 1 propagator).
/// Uses the Duhamel accumulator when the trajectory carries one and nu == 1.
double scattering_distance(const Trajectory& traj, std::size_t i, std::size_t j, double sigma);

/// Consecutive distances between snapshots (size() - 1 entries).
std::vector<double> scattering_defect(const Trajectory& traj, double sigma);

/// The same distance taken directly from the stored fields (ignores the accumulator).
double scattering_distance_direct(const Trajectory& traj, std::size_t i, std::size_t j, double sigma);

} // namespace fnls

#endif // FNLS_OBSERVABLES_HPP
