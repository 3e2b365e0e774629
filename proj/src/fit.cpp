#include "fnls/fit.hpp"

#include <Eigen/Dense>

#include "fnls/grid.hpp"
#include <boost/math/distributions/students_t.hpp>

#include <cmath>
#include <stdexcept>

namespace fnls {

LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() != y.size())
        throw std::invalid_argument("fit series have different lengths");
    if (x.size() < 3)
        throw std::invalid_argument("log-log fit needs at least 3 points");
    const Index n = static_cast<Index>(x.size());
    Eigen::MatrixXd A(n, 2);
    Eigen::VectorXd b(n);
    for (Index i = 0; i < n; ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            throw std::invalid_argument("log-log fit needs positive data");
        A(i, 0) = std::log(x[i]);
        A(i, 1) = 1.0;
        b[i] = std::log(y[i]);
    }
    const Eigen::Vector2d c = A.colPivHouseholderQr().solve(b);
    const Eigen::VectorXd res = b - A * c;

    LogLogFit f;
    f.slope = c[0];
    f.intercept = c[1];
    f.residual_rms = std::sqrt(res.squaredNorm() / n);
    f.x = x;
    f.y = y;
    const double lx_mean = A.col(0).mean();
    const double sxx = (A.col(0).array() - lx_mean).square().sum();
    const double dof = static_cast<double>(n - 2);
    f.slope_stderr = sxx > 0.0 ? std::sqrt(res.squaredNorm() / dof / sxx) : 0.0;
    const boost::math::students_t dist(dof);
    const double tq = boost::math::quantile(boost::math::complement(dist, 0.025));
    f.ci_low = f.slope - tq * f.slope_stderr;
    f.ci_high = f.slope + tq * f.slope_stderr;
    return f;
}

} // namespace fnls
