#include "fnls/spectral.hpp"
#include "fnls/fft.hpp"

#include <cmath>
#include <limits>

namespace fnls {

namespace {

bool is_dyadic(double N)
{
    if (!(N > 0.0) || !std::isfinite(N))
        return false;
    const double e = std::log2(N);
    return std::abs(e - std::round(e)) < 1e-12;
}

} // namespace

ComplexField apply_multiplier(const ComplexField& u, const SymbolSpec& spec)
{
    return apply_multiplier(u, evaluate_symbol(spec, u.grid()));
}

ComplexField apply_multiplier(const ComplexField& u, const Eigen::ArrayXcd& multiplier)
{
    if (multiplier.size() != u.size())
        throw std::invalid_argument("multiplier size does not match the field");
    Eigen::ArrayXcd spec = fft::forward(u);
    spec *= multiplier;
    return fft::inverse(u.grid(), spec);
}

std::vector<double> dyadic_scales(const Grid& grid)
{
    const int lo = static_cast<int>(std::floor(std::log2(grid.min_wavenumber())));
    const int hi = static_cast<int>(std::ceil(std::log2(grid.max_wavenumber())));
    std::vector<double> out;
    for (int j = lo; j <= hi; ++j)
        out.push_back(std::ldexp(1.0, j));
    return out;
}

ComplexField littlewood_paley_project(const ComplexField& u, double N)
{
    const auto scales = dyadic_scales(u.grid());
    if (!is_dyadic(N) || N < scales.front() * (1 - 1e-12) || N > scales.back() * (1 + 1e-12))
        throw Error("dyadic scale unresolved");
    return apply_multiplier(u, lp_cutoff(N));
}

double lebesgue_norm(const ComplexField& u, double r)
{
    if (!(r >= 1.0))
        throw std::invalid_argument("Lebesgue exponent must be >= 1");
    const Eigen::ArrayXd a = u.values().abs();
    if (std::isinf(r))
        return a.size() ? a.maxCoeff() : 0.0;
    const double dv = u.grid().cell_volume();
    if (r == 2.0)
        return std::sqrt(a.square().sum() * dv);
    // scale by the max to keep large r away from overflow
    const double m = a.maxCoeff();
    if (m == 0.0)
        return 0.0;
    return m * std::pow((a / m).pow(r).sum() * dv, 1.0 / r);
}

double spectral_l2_norm(const ComplexField& u)
{
    const double n = static_cast<double>(u.size());
    return std::sqrt(fft::forward(u).abs2().sum() * u.grid().volume() / (n * n));
}

double sobolev_norm(const ComplexField& u, double s, double r, Homogeneity homogeneity)
{
    const SymbolSpec weight = homogeneity == Homogeneity::Inhomogeneous ? bessel(s) : riesz(s, true);
    if (r == 2.0) {
        const double n = static_cast<double>(u.size());
        const Eigen::ArrayXcd m = evaluate_symbol(weight, u.grid());
        return std::sqrt((m.abs2() * fft::forward(u).abs2()).sum() * u.grid().volume() / (n * n));
    }
    if (s == 0.0 && homogeneity == Homogeneity::Inhomogeneous)
        return lebesgue_norm(u, r);
    return lebesgue_norm(apply_multiplier(u, weight), r);
}

Eigen::VectorXd round_to_lattice(const Eigen::VectorXd& v, const Grid& grid)
{
    if (v.size() != grid.dim())
        throw std::invalid_argument("vector does not match the grid dimension");
    Eigen::VectorXd out(v.size());
    for (int a = 0; a < grid.dim(); ++a)
        out[a] = std::round(v[a] / grid.fundamental(a)) * grid.fundamental(a);
    return out;
}

ComplexField modulate(const ComplexField& u, const Eigen::VectorXd& v)
{
    const Grid& g = u.grid();
    if (v.size() != g.dim())
        throw std::invalid_argument("vector does not match the grid dimension");
    for (int a = 0; a < g.dim(); ++a) {
        const double m = v[a] / g.fundamental(a);
        if (std::abs(m - std::round(m)) > 1e-9 * std::max(1.0, std::abs(m)))
            throw Error("modulation off-lattice");
    }
    ComplexField out(g);
    g.for_each_position([&](Index flat, const std::array<double, 3>& x) {
        double phase = 0.0;
        for (int a = 0; a < g.dim(); ++a)
            phase += v[a] * x[a];
        out.values()[flat] = u.values()[flat] * std::polar(1.0, -phase);
    });
    return out;
}

ComplexField spatial_shift(const ComplexField& u, const Eigen::VectorXd& a)
{
    const Grid& g = u.grid();
    if (a.size() != g.dim())
        throw std::invalid_argument("vector does not match the grid dimension");
    Eigen::ArrayXcd m(g.size());
    g.for_each_frequency([&](Index flat, const std::array<double, 3>& xi) {
        double phase = 0.0;
        for (int j = 0; j < g.dim(); ++j)
            phase += xi[j] * a[j];
        m[flat] = std::polar(1.0, -phase);
    });
    return apply_multiplier(u, m);
}

ComplexField dilate(const ComplexField& u, double factor)
{
    if (!(factor > 0.0))
        throw std::invalid_argument("dilation factor must be positive");
    std::vector<double> ext = u.grid().extents();
    for (double& l : ext)
        l *= factor;
    return ComplexField(u.grid().with_extents(ext), u.values());
}

ComplexField resample(const ComplexField& u, const std::vector<Index>& points, double max_dropped_fraction)
{
    const Grid& src = u.grid();
    const Grid dst = src.with_points(points);
    if (dst == src)
        return u;
    const Eigen::ArrayXcd in = fft::forward(u);
    Eigen::ArrayXcd out = Eigen::ArrayXcd::Zero(dst.size());
    const double scale = static_cast<double>(dst.size()) / static_cast<double>(src.size());
    const int d = src.dim();
    double dropped = 0.0;
    const double total = in.abs2().sum();
    src.for_each_index([&](Index flat, const std::array<Index, 3>& idx) {
        Index target = 0;
        for (int a = 0; a < d; ++a) {
            const Index m = src.signed_mode(a, idx[a]);
            const Index n = points[a];
            if (m > n / 2 || m <= -n / 2) {
                dropped += std::norm(in[flat]);
                return;
            }
            target += (m >= 0 ? m : m + n) * dst.stride(a);
        }
        out[target] = in[flat] * scale;
    });
    if (total > 0.0 && dropped / total > max_dropped_fraction)
        throw Error("rescale aliasing");
    return fft::inverse(dst, out);
}

double high_band_fraction(const ComplexField& u)
{
    const Grid& g = u.grid();
    const Eigen::ArrayXcd spec = fft::forward(u);
    const double total = spec.abs2().sum();
    if (total == 0.0)
        return 0.0;
    double high = 0.0;
    g.for_each_index([&](Index flat, const std::array<Index, 3>& idx) {
        for (int a = 0; a < g.dim(); ++a) {
            if (std::abs(g.signed_mode(a, idx[a])) > g.points(a) / 4) {
                high += std::norm(spec[flat]);
                return;
            }
        }
    });
    return high / total;
}

double boundary_amplitude(const ComplexField& u)
{
    const Grid& g = u.grid();
    double out = 0.0;
    g.for_each_index([&](Index flat, const std::array<Index, 3>& idx) {
        for (int a = 0; a < g.dim(); ++a) {
            if (idx[a] == 0) {
                out = std::max(out, std::abs(u.values()[flat]));
                return;
            }
        }
    });
    return out;
}

} // namespace fnls
