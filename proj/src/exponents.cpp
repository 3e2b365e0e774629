#include "fnls/exponents.hpp"
#include "fnls/symbols.hpp"

#include <cmath>

namespace fnls {

namespace {

constexpr double kTol = 1e-12;

void check_inputs(int d, double p, double sigma)
{
    if (d < 1)
        throw std::invalid_argument("dimension must be >= 1");
    if (!(p > 1.0))
        throw std::invalid_argument("nonlinearity power must exceed 1");
    if (!(sigma > 0.0 && sigma <= 1.0))
        throw std::invalid_argument("sigma must lie in (0, 1]");
}

double inverse(double r) { return std::isinf(r) ? 0.0 : 1.0 / r; }

} // namespace

CriticalExponents critical_exponents(int d, double p, double sigma)
{
    check_inputs(d, p, sigma);
    return {0.5 * d - 2.0 * sigma / (p - 1.0), 0.5 * (1.0 - sigma)};
}

std::string to_string(Regime r)
{
    switch (r) {
    case Regime::SubcriticalLwp:
        return "SUBCRITICAL_LWP";
    case Regime::CriticalLwp:
        return "CRITICAL_LWP";
    case Regime::IllposedRange:
        return "ILLPOSED_RANGE";
    case Regime::OutsideTheory:
        return "OUTSIDE_THEORY";
    }
    return "OUTSIDE_THEORY";
}

RegimeReport classify_regime(int d, double p, double sigma, double s)
{
    const auto [s_c, s_g] = critical_exponents(d, p, sigma);
    RegimeReport rep;
    rep.s_c = s_c;
    rep.s_g = s_g;

    bool sub = false;
    if (d == 1 && p >= 2.0 && p < 5.0 && s >= s_g - kTol) {
        sub = true;
        rep.hypothesis_notes.push_back("subcritical LWP: d=1, 2<=p<5, s>=s_g");
    }
    if (d == 1 && p >= 5.0 && s > s_c + kTol) {
        sub = true;
        rep.hypothesis_notes.push_back("subcritical LWP: d=1, p>=5, s>s_c");
    }
    if (d >= 2 && p >= 3.0 && s > s_c + kTol) {
        sub = true;
        rep.hypothesis_notes.push_back("subcritical LWP: d>=2, p>=3, s>s_c");
    }

    bool crit = false;
    if (std::abs(s - s_c) <= kTol && ((d == 1 && p > 5.0) || (d >= 2 && p > 3.0))) {
        crit = true;
        rep.hypothesis_notes.push_back(d == 1 ? "critical LWP: s=s_c, d=1, p>5" : "critical LWP: s=s_c, d>=2, p>3");
    }

    bool ill = false;
    const int k = d / 2 + 1;
    const bool odd_integer = std::abs(p - std::round(p)) <= kTol && static_cast<long>(std::round(p)) % 2 == 1;
    const bool power_ok = odd_integer || p >= k + 1 - kTol;
    if (d >= 1 && d <= 3 && sigma > 0.25 * d && sigma < 1.0 && s > s_c + kTol && s < -kTol && power_ok) {
        ill = true;
        rep.hypothesis_notes.push_back(odd_integer ? "ill-posedness: s in (s_c,0), sigma in (d/4,1), p odd"
                                                   : "ill-posedness: s in (s_c,0), sigma in (d/4,1), p>=k+1");
    }

    if (sub)
        rep.regime = Regime::SubcriticalLwp;
    else if (crit)
        rep.regime = Regime::CriticalLwp;
    else if (ill)
        rep.regime = Regime::IllposedRange;
    else
        rep.regime = Regime::OutsideTheory;
    return rep;
}

bool is_admissible(double q, double r, int d)
{
    if (d < 1 || !(q >= 2.0) || !(r >= 2.0))
        return false;
    if (q == 2.0 && std::isinf(r) && d == 2)
        return false;
    return std::abs(2.0 * inverse(q) + d * inverse(r) - 0.5 * d) <= kTol;
}

double strichartz_weight_exponent(double r, int d, double sigma)
{
    return -d * (1.0 - sigma) * (0.5 - inverse(r));
}

SymbolBound verify_error_symbol_bound(const Eigen::VectorXd& v, double sigma, const Grid& grid)
{
    const Eigen::ArrayXcd e = evaluate_symbol(error_symbol(v, sigma), grid);
    SymbolBound out;
    out.argmax_mode = Eigen::VectorXd::Zero(grid.dim());
    grid.for_each_frequency([&](Index flat, const std::array<double, 3>& xi) {
        const double r = std::sqrt(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]);
        if (r == 0.0)
            return;
        const double ratio = std::abs(e[flat]) / std::pow(r, 2.0 * sigma);
        if (ratio > out.sup_ratio) {
            out.sup_ratio = ratio;
            for (int a = 0; a < grid.dim(); ++a)
                out.argmax_mode[a] = xi[a];
        }
    });
    return out;
}

} // namespace fnls
