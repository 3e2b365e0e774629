#ifndef FNLS_REPORT_HPP
#define FNLS_REPORT_HPP

#include "fnls/fit.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace fnls {

struct Check
{
    std::string name;
    double value = 0.0;
    std::string requirement;
    bool passed = false;
};

struct NamedFit
{
    std::string name;
    LogLogFit fit;
};

/// Echoed inputs and a CSV-backed table of measurements, with fits and threshold checks attached.
struct ExperimentReport
{
    std::string experiment;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<NamedFit> fits;
    std::vector<Check> checks;

    void add_input(const std::string& key, const std::string& value) { inputs.emplace_back(key, value); }
    void add_input(const std::string& key, double value);
    void add_check(const std::string& name, double value, const std::string& requirement, bool passed);
    bool all_passed() const;
    const Check& check(const std::string& name) const;
    const LogLogFit& fit(const std::string& name) const;
    /// Column by name over all rows.
    std::vector<double> column(const std::string& name) const;

    void write_csv(std::ostream& os) const;
    void write_summary(std::ostream& os) const;
    /// report.csv and summary.txt under dir (created if needed).
    void write(const std::string& dir) const;
};

std::string format_double(double v);

} // namespace fnls

#endif // FNLS_REPORT_HPP
