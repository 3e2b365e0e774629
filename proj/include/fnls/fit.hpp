#ifndef FNLS_FIT_HPP
#define FNLS_FIT_HPP

#include <vector>

namespace fnls {

/// Least-squares line through (log x, log y).
struct LogLogFit
{
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
    double ci_low = 0.0;  // 95% interval on the slope (Student t, n - 2 dof)
    double ci_high = 0.0;
    double residual_rms = 0.0;
    std::vector<double> x;
    std::vector<double> y;
};

/// Needs >= 3 strictly positive points.
LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

} // namespace fnls

#endif // FNLS_FIT_HPP
