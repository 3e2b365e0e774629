#include "fnls/symbols.hpp"

#include <cmath>
#include <functional>
#include <limits>

namespace fnls {

namespace {

using Frequency = std::array<double, 3>;
using PointSymbol = std::function<Complex(const Frequency&)>;

template <class... Ts>
struct Overloaded : Ts...
{
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double norm_of(const Frequency& xi, int dim)
{
    double s = 0.0;
    for (int a = 0; a < dim; ++a)
        s += xi[a] * xi[a];
    return std::sqrt(s);
}

Frequency to_frequency(const Eigen::VectorXd& v)
{
    Frequency out{0.0, 0.0, 0.0};
    for (Index a = 0; a < v.size(); ++a)
        out[a] = v[a];
    return out;
}

void require_dim(const Eigen::VectorXd& v, int dim)
{
    if (v.size() != dim)
        throw std::invalid_argument("velocity vector does not match the grid dimension");
}

/// Terms shared by E and p_v: |xi - v|^{2s} - |v|^{2s} + 2s|v|^{2s-2} v.xi.
struct ShiftedPower
{
    Frequency v;
    double sigma;
    int dim;
    double v_power;   // |v|^{2 sigma}
    double drift;     // 2 sigma |v|^{2 sigma - 2}, zero when v = 0

    ShiftedPower(const Eigen::VectorXd& vel, double s, int d) : v(to_frequency(vel)), sigma(s), dim(d)
    {
        const double vn = vel.norm();
        v_power = std::pow(vn, 2.0 * sigma);
        drift = vn > 0.0 ? 2.0 * sigma * std::pow(vn, 2.0 * sigma - 2.0) : 0.0;
    }

    double operator()(const Frequency& xi) const
    {
        Frequency diff{0.0, 0.0, 0.0};
        double vdot = 0.0;
        for (int a = 0; a < dim; ++a) {
            diff[a] = xi[a] - v[a];
            vdot += v[a] * xi[a];
        }
        return std::pow(norm_of(diff, dim), 2.0 * sigma) - v_power + drift * vdot;
    }
};

PointSymbol make_point_symbol(const SymbolSpec& spec, int dim);

PointSymbol make_point_symbol_impl(const SymbolSpec::Kind& kind, int dim)
{
    return std::visit(
        Overloaded{
            [dim](const symbol::FractionalLaplacian& k) -> PointSymbol {
                return [=](const Frequency& xi) { return Complex(std::pow(norm_of(xi, dim), 2.0 * k.sigma), 0.0); };
            },
            [dim](const symbol::Bessel& k) -> PointSymbol {
                return [=](const Frequency& xi) {
                    const double r = norm_of(xi, dim);
                    return Complex(std::pow(1.0 + r * r, 0.5 * k.s), 0.0);
                };
            },
            [dim](const symbol::Riesz& k) -> PointSymbol {
                if (k.s < 0.0 && !k.project_zero_mode)
                    throw Error("singular symbol at zero mode");
                return [=](const Frequency& xi) {
                    const double r = norm_of(xi, dim);
                    if (r == 0.0)
                        return Complex(k.s == 0.0 ? 1.0 : 0.0, 0.0);
                    return Complex(std::pow(r, k.s), 0.0);
                };
            },
            [dim](const symbol::StrichartzWeight& k) -> PointSymbol {
                if (k.d != dim)
                    throw std::invalid_argument("Strichartz weight dimension does not match the grid");
                const double inv_r = std::isinf(k.r) ? 0.0 : 1.0 / k.r;
                const double w = -k.d * (1.0 - k.sigma) * (0.5 - inv_r);
                return [=](const Frequency& xi) {
                    const double r = norm_of(xi, dim);
                    const double bessel = std::pow(1.0 + r * r, 0.5 * k.s);
                    if (w == 0.0)
                        return Complex(bessel, 0.0);
                    if (r == 0.0)
                        return Complex(0.0, 0.0);
                    return Complex(std::pow(r, w) * bessel, 0.0);
                };
            },
            [dim](const symbol::LpCutoff& k) -> PointSymbol {
                if (!(k.N > 0.0))
                    throw std::invalid_argument("dyadic scale must be positive");
                return [=](const Frequency& xi) { return Complex(lp_bump(norm_of(xi, dim) / k.N), 0.0); };
            },
            [dim](const symbol::LinearPropagator& k) -> PointSymbol {
                const double coeff = k.t * std::pow(k.nu, 2.0 * k.sigma);
                return [=](const Frequency& xi) {
                    return std::polar(1.0, coeff * std::pow(norm_of(xi, dim), 2.0 * k.sigma));
                };
            },
            [dim](const symbol::ErrorSymbol& k) -> PointSymbol {
                require_dim(k.v, dim);
                // At sigma = 1 the symbol is the zero polynomial (exact Galilean invariance).
                if (k.sigma == 1.0)
                    return [](const Frequency&) { return Complex(0.0, 0.0); };
                ShiftedPower shifted(k.v, k.sigma, dim);
                return [=](const Frequency& xi) {
                    return Complex(shifted(xi) - std::pow(norm_of(xi, dim), 2.0 * k.sigma), 0.0);
                };
            },
            [dim](const symbol::SolitonSymbol& k) -> PointSymbol {
                require_dim(k.v, dim);
                ShiftedPower shifted(k.v, k.sigma, dim);
                return [=](const Frequency& xi) { return Complex(shifted(xi), 0.0); };
            },
            [dim](const symbol::Product& k) -> PointSymbol {
                std::vector<PointSymbol> parts;
                parts.reserve(k.factors.size());
                for (const auto& f : k.factors)
                    parts.push_back(make_point_symbol(f, dim));
                return [parts = std::move(parts)](const Frequency& xi) {
                    Complex m(1.0, 0.0);
                    for (const auto& part : parts)
                        m *= part(xi);
                    return m;
                };
            },
        },
        kind);
}

PointSymbol make_point_symbol(const SymbolSpec& spec, int dim) { return make_point_symbol_impl(spec.kind(), dim); }

} // namespace

SymbolSpec fractional_laplacian(double sigma) { return SymbolSpec(symbol::FractionalLaplacian{sigma}); }
SymbolSpec bessel(double s) { return SymbolSpec(symbol::Bessel{s}); }
SymbolSpec riesz(double s, bool project_zero_mode) { return SymbolSpec(symbol::Riesz{s, project_zero_mode}); }
SymbolSpec strichartz_weight(double s, double r, double sigma, int d) { return SymbolSpec(symbol::StrichartzWeight{s, r, sigma, d}); }
SymbolSpec lp_cutoff(double N) { return SymbolSpec(symbol::LpCutoff{N}); }
SymbolSpec linear_propagator(double t, double sigma, double nu) { return SymbolSpec(symbol::LinearPropagator{t, sigma, nu}); }
SymbolSpec error_symbol(Eigen::VectorXd v, double sigma) { return SymbolSpec(symbol::ErrorSymbol{std::move(v), sigma}); }
SymbolSpec soliton_symbol(Eigen::VectorXd v, double sigma) { return SymbolSpec(symbol::SolitonSymbol{std::move(v), sigma}); }
SymbolSpec product(std::vector<SymbolSpec> factors) { return SymbolSpec(symbol::Product{std::move(factors)}); }

Eigen::ArrayXcd evaluate_symbol(const SymbolSpec& spec, const Grid& grid)
{
    const PointSymbol m = make_point_symbol(spec, grid.dim());
    Eigen::ArrayXcd out(grid.size());
    grid.for_each_frequency([&](Index flat, const Frequency& xi) { out[flat] = m(xi); });
    return out;
}

Complex evaluate_symbol_at(const SymbolSpec& spec, const Eigen::VectorXd& xi)
{
    return make_point_symbol(spec, static_cast<int>(xi.size()))(to_frequency(xi));
}

double smooth_cutoff(double r)
{
    if (r <= 1.0)
        return 1.0;
    if (r >= 2.0)
        return 0.0;
    const double a = std::exp(-1.0 / (2.0 - r));
    const double b = std::exp(-1.0 / (r - 1.0));
    return a / (a + b);
}

double lp_bump(double r) { return smooth_cutoff(r) - smooth_cutoff(2.0 * r); }

} // namespace fnls
