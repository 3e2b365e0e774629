#ifndef FNLS_EXPONENTS_HPP
#define FNLS_EXPONENTS_HPP

#include "fnls/grid.hpp"

#include <string>
#include <vector>

namespace fnls {

struct CriticalExponents
{
    double s_c; // d/2 - 2 sigma/(p-1)
    double s_g; // (1 - sigma)/2
};

CriticalExponents critical_exponents(int d, double p, double sigma);

enum class Regime { SubcriticalLwp, CriticalLwp, IllposedRange, OutsideTheory };

std::string to_string(Regime r);

struct RegimeReport
{
    double s_c = 0.0;
    double s_g = 0.0;
    Regime regime = Regime::OutsideTheory;
    std::vector<std::string> hypothesis_notes;
};

/// Bookkeeping of the theorem hypotheses. Priority on overlap:
/// subcritical, then critical, then ill-posed; every match is noted.
RegimeReport classify_regime(int d, double p, double sigma, double s);

/// 2/q + d/r == d/2 (within 1e-12), 2 <= q, r <= inf, (q, r, d) != (2, inf, 2).
bool is_admissible(double q, double r, int d);

/// -d (1 - sigma)(1/2 - 1/r)
double strichartz_weight_exponent(double r, int d, double sigma);

struct SymbolBound
{
    double sup_ratio = 0.0;
    Eigen::VectorXd argmax_mode;
};

/// sup over nonzero lattice modes of |E(xi)| / |xi|^{2 sigma}.
SymbolBound verify_error_symbol_bound(const Eigen::VectorXd& v, double sigma, const Grid& grid);

} // namespace fnls

#endif // FNLS_EXPONENTS_HPP
