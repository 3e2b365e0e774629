#ifndef FNLS_PROFILE_HPP
#define FNLS_PROFILE_HPP

#include "fnls/grid.hpp"

namespace fnls {

/// Localized initial profile. Only Gaussians amplitude * exp(-|x - c|^2 / (2 width^2)) for now.
struct ProfileSpec
{
    enum class Shape { Gaussian };

    Shape shape = Shape::Gaussian;
    double width = 1.0;
    double amplitude = 1.0;
    Eigen::VectorXd center; // empty means the origin

    static ProfileSpec gaussian(double width, double amplitude = 1.0);
};

/// Samples the profile. Throws if the boundary amplitude exceeds `boundary_tol`
/// (pass a negative tolerance to skip the check).
ComplexField sample_profile(const ProfileSpec& spec, const Grid& grid, double boundary_tol = 1e-12);

/// Same profile evaluated at scaled coordinates: f(scale * x).
ComplexField sample_profile_scaled(const ProfileSpec& spec, const Grid& grid, double scale,
                                   double boundary_tol = 1e-12);

} // namespace fnls

#endif // FNLS_PROFILE_HPP
