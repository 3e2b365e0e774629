#include "fnls/grid.hpp"

#include <cmath>
#include <string>

namespace fnls {

namespace {

bool is_power_of_two(Index n) { return n > 0 && (n & (n - 1)) == 0; }

} // namespace

Grid::Grid(std::vector<Index> points, std::vector<double> extents, Index max_points)
    : points_(std::move(points)), extents_(std::move(extents))
{
    if (points_.empty() || points_.size() > 3)
        throw std::invalid_argument("grid dimension must be 1, 2 or 3");
    if (points_.size() != extents_.size())
        throw std::invalid_argument("grid needs one extent per axis");
    for (std::size_t a = 0; a < points_.size(); ++a) {
        if (!is_power_of_two(points_[a]) || points_[a] < 8)
            throw std::invalid_argument("grid point counts must be powers of two >= 8");
        if (!(extents_[a] > 0.0) || !std::isfinite(extents_[a]))
            throw std::invalid_argument("grid extents must be positive");
    }
    if (size() > max_points)
        throw std::invalid_argument("grid exceeds the configured point budget ("
                                    + std::to_string(max_points) + ")");
}

Grid Grid::cube(int dim, Index points, double extent)
{
    return Grid(std::vector<Index>(dim, points), std::vector<double>(dim, extent));
}

Index Grid::size() const
{
    Index n = 1;
    for (Index p : points_)
        n *= p;
    return n;
}

double Grid::volume() const
{
    double v = 1.0;
    for (double l : extents_)
        v *= l;
    return v;
}

double Grid::cell_volume() const { return volume() / static_cast<double>(size()); }

double Grid::min_spacing() const
{
    double h = spacing(0);
    for (int a = 1; a < dim(); ++a)
        h = std::min(h, spacing(a));
    return h;
}

Index Grid::stride(int axis) const
{
    Index s = 1;
    for (int a = dim() - 1; a > axis; --a)
        s *= points_[a];
    return s;
}

double Grid::coordinate(int axis, Index i) const
{
    return -0.5 * extents_[axis] + spacing(axis) * static_cast<double>(i);
}

Index Grid::signed_mode(int axis, Index i) const
{
    const Index n = points_[axis];
    return i <= n / 2 ? i : i - n;
}

double Grid::max_wavenumber() const
{
    double s = 0.0;
    for (int a = 0; a < dim(); ++a) {
        const double k = kPi * static_cast<double>(points_[a]) / extents_[a];
        s += k * k;
    }
    return std::sqrt(s);
}

double Grid::min_wavenumber() const
{
    double k = fundamental(0);
    for (int a = 1; a < dim(); ++a)
        k = std::min(k, fundamental(a));
    return k;
}

Eigen::MatrixXd Grid::frequencies() const
{
    Eigen::MatrixXd out(dim(), size());
    for_each_frequency([&](Index flat, const std::array<double, 3>& xi) {
        for (int a = 0; a < dim(); ++a)
            out(a, flat) = xi[a];
    });
    return out;
}

Eigen::MatrixXd Grid::positions() const
{
    Eigen::MatrixXd out(dim(), size());
    for_each_position([&](Index flat, const std::array<double, 3>& x) {
        for (int a = 0; a < dim(); ++a)
            out(a, flat) = x[a];
    });
    return out;
}

Grid Grid::with_extents(std::vector<double> extents) const { return Grid(points_, std::move(extents)); }

Grid Grid::with_points(std::vector<Index> points) const { return Grid(std::move(points), extents_); }

ComplexField::ComplexField(Grid grid)
    : grid_(std::move(grid)), values_(Eigen::ArrayXcd::Zero(grid_.size()))
{
}

ComplexField::ComplexField(Grid grid, Eigen::ArrayXcd values)
    : grid_(std::move(grid)), values_(std::move(values))
{
    if (values_.size() != grid_.size())
        throw std::invalid_argument("field value count does not match the grid");
}

bool ComplexField::all_finite() const
{
    return values_.real().allFinite() && values_.imag().allFinite();
}

void ComplexField::require_finite() const
{
    if (!all_finite())
        throw Error("nonfinite field");
}

ComplexField& ComplexField::operator+=(const ComplexField& other)
{
    if (!(grid_ == other.grid_))
        throw std::invalid_argument("fields live on different grids");
    values_ += other.values_;
    return *this;
}

ComplexField& ComplexField::operator-=(const ComplexField& other)
{
    if (!(grid_ == other.grid_))
        throw std::invalid_argument("fields live on different grids");
    values_ -= other.values_;
    return *this;
}

ComplexField& ComplexField::operator*=(Complex factor)
{
    values_ *= factor;
    return *this;
}

ComplexField operator+(ComplexField a, const ComplexField& b) { return a += b; }
ComplexField operator-(ComplexField a, const ComplexField& b) { return a -= b; }
ComplexField operator*(Complex factor, ComplexField a) { return a *= factor; }

ComplexField conj(const ComplexField& u) { return ComplexField(u.grid(), u.values().conjugate()); }

void ModelParams::validate() const
{
    if (d < 1 || d > 3)
        throw std::invalid_argument("dimension must be 1, 2 or 3");
    if (!(sigma > 0.0 && sigma <= 1.0))
        throw std::invalid_argument("sigma must lie in (0, 1]");
    if (!(p > 1.0))
        throw std::invalid_argument("nonlinearity power must exceed 1");
    if (mu != 1 && mu != -1)
        throw std::invalid_argument("mu must be +1 or -1");
    if (!(nu >= 0.0 && nu <= 1.0))
        throw std::invalid_argument("dispersion coefficient nu must lie in [0, 1]");
}

} // namespace fnls
