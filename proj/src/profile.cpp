#include "fnls/profile.hpp"
#include "fnls/spectral.hpp"

#include <cmath>

namespace fnls {

ProfileSpec ProfileSpec::gaussian(double width, double amplitude)
{
    ProfileSpec p;
    p.width = width;
    p.amplitude = amplitude;
    return p;
}

ComplexField sample_profile_scaled(const ProfileSpec& spec, const Grid& grid, double scale, double boundary_tol)
{
    if (!(spec.width > 0.0))
        throw std::invalid_argument("profile width must be positive");
    if (spec.center.size() != 0 && spec.center.size() != grid.dim())
        throw std::invalid_argument("profile center does not match the grid dimension");
    const int d = grid.dim();
    const double inv = 1.0 / (2.0 * spec.width * spec.width);
    ComplexField out = ComplexField::from_function(grid, [&](const std::array<double, 3>& x) {
        double r2 = 0.0;
        for (int a = 0; a < d; ++a) {
            const double c = spec.center.size() ? spec.center[a] : 0.0;
            const double y = scale * x[a] - c;
            r2 += y * y;
        }
        return Complex(spec.amplitude * std::exp(-r2 * inv), 0.0);
    });
    if (boundary_tol >= 0.0 && boundary_amplitude(out) > boundary_tol)
        throw Error("profile not localized in the box");
    return out;
}

ComplexField sample_profile(const ProfileSpec& spec, const Grid& grid, double boundary_tol)
{
    return sample_profile_scaled(spec, grid, 1.0, boundary_tol);
}

} // namespace fnls
