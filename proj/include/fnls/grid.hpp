#ifndef FNLS_GRID_HPP
#define FNLS_GRID_HPP

#include <Eigen/Core>

#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

namespace fnls {

using Complex = std::complex<double>;
using Index = Eigen::Index;

/// Raised for every documented failure of the library. The message text is
/// part of the contract (tests and the CLI match on it).
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

inline constexpr Index kDefaultMaxPoints = Index{1} << 24;
inline constexpr double kPi = 3.14159265358979323846;

/**
 * Periodic box [-L_j/2, L_j/2) in d = 1..3 dimensions.
 *
 * Samples are stored row-major (last axis fastest). The wavenumber of index
 * i on axis j is 2*pi*m/L_j with m = i for i <= n_j/2 and m = i - n_j
 * otherwise, so the single Nyquist mode per axis is a positive frequency.
 */
class Grid
{
public:
    Grid(std::vector<Index> points, std::vector<double> extents,
         Index max_points = kDefaultMaxPoints);

    static Grid cube(int dim, Index points, double extent);

    int dim() const { return static_cast<int>(points_.size()); }
    Index points(int axis) const { return points_[axis]; }
    double extent(int axis) const { return extents_[axis]; }
    double spacing(int axis) const { return extents_[axis] / static_cast<double>(points_[axis]); }
    double fundamental(int axis) const { return 2.0 * kPi / extents_[axis]; }
    const std::vector<Index>& shape() const { return points_; }
    const std::vector<double>& extents() const { return extents_; }

    Index size() const;
    double volume() const;
    double cell_volume() const;
    double min_spacing() const;

    /// Row-major stride of an axis in the flat sample array.
    Index stride(int axis) const;

    double coordinate(int axis, Index i) const;
    Index signed_mode(int axis, Index i) const;
    double wavenumber(int axis, Index i) const { return fundamental(axis) * static_cast<double>(signed_mode(axis, i)); }

    /// Largest |xi| on the lattice (a corner of the Nyquist box).
    double max_wavenumber() const;
    /// Smallest nonzero |xi| on the lattice.
    double min_wavenumber() const;

    /// dim x size matrices of lattice frequencies / sample positions.
    Eigen::MatrixXd frequencies() const;
    Eigen::MatrixXd positions() const;

    Grid with_extents(std::vector<double> extents) const;
    Grid with_points(std::vector<Index> points) const;

    /// Calls f(flat_index, xi) for every lattice mode, xi padded to 3 entries.
    template <typename F>
    void for_each_frequency(F&& f) const
    {
        for_each_index([&](Index flat, const std::array<Index, 3>& idx) {
            std::array<double, 3> xi{0.0, 0.0, 0.0};
            for (int a = 0; a < dim(); ++a)
                xi[a] = wavenumber(a, idx[a]);
            f(flat, xi);
        });
    }

    template <typename F>
    void for_each_position(F&& f) const
    {
        for_each_index([&](Index flat, const std::array<Index, 3>& idx) {
            std::array<double, 3> x{0.0, 0.0, 0.0};
            for (int a = 0; a < dim(); ++a)
                x[a] = coordinate(a, idx[a]);
            f(flat, x);
        });
    }

    template <typename F>
    void for_each_index(F&& f) const
    {
        const Index n0 = points_[0];
        const Index n1 = dim() > 1 ? points_[1] : 1;
        const Index n2 = dim() > 2 ? points_[2] : 1;
        Index flat = 0;
        for (Index i = 0; i < n0; ++i)
            for (Index j = 0; j < n1; ++j)
                for (Index k = 0; k < n2; ++k, ++flat)
                    f(flat, std::array<Index, 3>{i, j, k});
    }

    bool operator==(const Grid& other) const = default;

private:
    std::vector<Index> points_;
    std::vector<double> extents_;
};

/// Complex samples of a field on a Grid.
class ComplexField
{
public:
    explicit ComplexField(Grid grid);
    ComplexField(Grid grid, Eigen::ArrayXcd values);

    template <typename F>
    static ComplexField from_function(const Grid& grid, F&& f)
    {
        ComplexField out(grid);
        grid.for_each_position([&](Index flat, const std::array<double, 3>& x) {
            out.values_[flat] = f(x);
        });
        return out;
    }

    const Grid& grid() const { return grid_; }
    const Eigen::ArrayXcd& values() const { return values_; }
    Eigen::ArrayXcd& values() { return values_; }
    Index size() const { return values_.size(); }

    bool all_finite() const;
    /// Throws Error("nonfinite field") if any sample is NaN/Inf.
    void require_finite() const;

    ComplexField& operator+=(const ComplexField& other);
    ComplexField& operator-=(const ComplexField& other);
    ComplexField& operator*=(Complex factor);

private:
    Grid grid_;
    Eigen::ArrayXcd values_;
};

ComplexField operator+(ComplexField a, const ComplexField& b);
ComplexField operator-(ComplexField a, const ComplexField& b);
ComplexField operator*(Complex factor, ComplexField a);
ComplexField conj(const ComplexField& u);

/// Coefficients of i u_t + nu^{2 sigma} (-Delta)^sigma u + mu |u|^{p-1} u = 0.
struct ModelParams
{
    int d = 1;
    double sigma = 0.75;
    double p = 3.0;
    int mu = 1;
    double nu = 1.0;

    void validate() const;
};

} // namespace fnls

#endif // FNLS_GRID_HPP
