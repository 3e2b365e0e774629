#ifndef FNLS_SYMBOLS_HPP
#define FNLS_SYMBOLS_HPP

#include "fnls/grid.hpp"

#include <variant>
#include <vector>

namespace fnls {

class SymbolSpec;

namespace symbol {

/// |xi|^{2 sigma}
struct FractionalLaplacian
{
    double sigma;
};

/// (1 + |xi|^2)^{s/2}
struct Bessel
{
    double s;
};

/// |xi|^s. For s < 0 the zero mode must be projected out explicitly.
struct Riesz
{
    double s;
    bool project_zero_mode = false;
};

/// |xi|^{-d(1-sigma)(1/2-1/r)} (1 + |xi|^2)^{s/2}; zero mode set to 0
/// whenever the homogeneous exponent is negative.
struct StrichartzWeight
{
    double s;
    double r;
    double sigma;
    int d;
};

/// psi(xi / N), the Littlewood-Paley annulus bump.
struct LpCutoff
{
    double N;
};

/// exp(i t nu^{2 sigma} |xi|^{2 sigma})
struct LinearPropagator
{
    double t;
    double sigma;
    double nu;
};

/// E(xi) = |xi - v|^{2s} - |xi|^{2s} - |v|^{2s} + 2s |v|^{2s-2} v.xi  (s = sigma)
struct ErrorSymbol
{
    Eigen::VectorXd v;
    double sigma;
};

/// p_v(xi) = |xi - v|^{2s} - |v|^{2s} + 2s |v|^{2s-2} v.xi  (s = sigma)
struct SolitonSymbol
{
    Eigen::VectorXd v;
    double sigma;
};

struct Product
{
    std::vector<SymbolSpec> factors;
};

} // namespace symbol

/// Declarative Fourier multiplier. Build with the factory functions below.
class SymbolSpec
{
public:
    using Kind = std::variant<symbol::FractionalLaplacian, symbol::Bessel, symbol::Riesz,
                              symbol::StrichartzWeight, symbol::LpCutoff, symbol::LinearPropagator,
                              symbol::ErrorSymbol, symbol::SolitonSymbol, symbol::Product>;

    SymbolSpec(Kind kind) : kind_(std::move(kind)) {}

    const Kind& kind() const { return kind_; }

private:
    Kind kind_;
};

SymbolSpec fractional_laplacian(double sigma);
SymbolSpec bessel(double s);
SymbolSpec riesz(double s, bool project_zero_mode = false);
SymbolSpec strichartz_weight(double s, double r, double sigma, int d);
SymbolSpec lp_cutoff(double N);
SymbolSpec linear_propagator(double t, double sigma, double nu = 1.0);
SymbolSpec error_symbol(Eigen::VectorXd v, double sigma);
SymbolSpec soliton_symbol(Eigen::VectorXd v, double sigma);
SymbolSpec product(std::vector<SymbolSpec> factors);

/// Per-mode multiplier values on the grid's lattice (flat, row-major).
Eigen::ArrayXcd evaluate_symbol(const SymbolSpec& spec, const Grid& grid);

/// Point evaluation of the scalar kinds at a single frequency vector.
Complex evaluate_symbol_at(const SymbolSpec& spec, const Eigen::VectorXd& xi);

/**
 * Smooth radial cutoff: 1 on [0,1], 0 on [2,inf), C-infinity in between
 * (ratio of exp(-1/t) bumps).
 */
double smooth_cutoff(double r);

/// psi(r) = eta(r) - eta(2r); supported in [1/2, 2], and sum_N psi(r/N) = 1.
double lp_bump(double r);

} // namespace fnls

#endif // FNLS_SYMBOLS_HPP
