#ifndef FNLS_SPECTRAL_HPP
#define FNLS_SPECTRAL_HPP

#include "fnls/grid.hpp"
#include "fnls/symbols.hpp"

#include <optional>

namespace fnls {

enum class Homogeneity { Homogeneous, Inhomogeneous };

/// inverse( m(xi) * forward(u) )
ComplexField apply_multiplier(const ComplexField& u, const SymbolSpec& spec);
ComplexField apply_multiplier(const ComplexField& u, const Eigen::ArrayXcd& multiplier);

/**
 * Dyadic scales N = 2^j resolvable on the grid, from 2^floor(log2 k_min) up to
 * 2^ceil(log2 k_max) (k_min the fundamental, k_max the lattice corner). Over
 * this range sum_N psi(xi/N) == 1 on every nonzero lattice mode.
 */
std::vector<double> dyadic_scales(const Grid& grid);

/// P_N u. N must be one of dyadic_scales(grid), else Error("dyadic scale unresolved").
ComplexField littlewood_paley_project(const ComplexField& u, double N);

/// (sum |u|^r dx)^{1/r}; r = infinity gives max |u|.
double lebesgue_norm(const ComplexField& u, double r);

/// Plancherel side of the L^2 norm: sqrt(vol / size^2 * sum |u_hat|^2).
double spectral_l2_norm(const ComplexField& u);

/**
 * W^{s,r} (Bessel weight) or homogeneous (Riesz weight, zero mode dropped).
 * For r = 2 the weighted sum is taken directly on the spectrum.
 */
double sobolev_norm(const ComplexField& u, double s, double r, Homogeneity homogeneity);

/// Nearest vector whose components are integer multiples of 2 pi / L_j.
Eigen::VectorXd round_to_lattice(const Eigen::VectorXd& v, const Grid& grid);

/// e^{-i v.x} u. Throws Error("modulation off-lattice") unless v is on the lattice.
ComplexField modulate(const ComplexField& u, const Eigen::VectorXd& v);

/// u(x - a) through the Fourier phase e^{-i xi.a}.
ComplexField spatial_shift(const ComplexField& u, const Eigen::VectorXd& a);

/// Same samples read on a box scaled by `factor`: represents u(x / factor).
ComplexField dilate(const ComplexField& u, double factor);

/**
 * Trigonometric interpolation onto `points` (same extents) by spectral
 * zero-padding or truncation. Truncation that would discard more than
 * `max_dropped_fraction` of the energy throws Error("rescale aliasing").
 */
ComplexField resample(const ComplexField& u, const std::vector<Index>& points,
                      double max_dropped_fraction = 1e-8);

/// Energy fraction in modes with |m_j| > n_j/4 on some axis.
double high_band_fraction(const ComplexField& u);

/// max |u| over the samples on the faces x_j = -L_j/2 of the box.
double boundary_amplitude(const ComplexField& u);

} // namespace fnls

#endif // FNLS_SPECTRAL_HPP
