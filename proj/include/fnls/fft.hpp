#ifndef FNLS_FFT_HPP
#define FNLS_FFT_HPP

#include "fnls/grid.hpp"

namespace fnls::fft {

/// Unnormalized forward DFT of the samples (sum_x u(x) e^{-i k x_index}).
Eigen::ArrayXcd forward(const ComplexField& u);

/// Inverse DFT including the 1/size normalization, so inverse(forward(u)) == u.
ComplexField inverse(const Grid& grid, const Eigen::ArrayXcd& spectrum);

/// Number of cached transform plans (for tests of the cache).
std::size_t cached_plans();

} // namespace fnls::fft

#endif // FNLS_FFT_HPP
