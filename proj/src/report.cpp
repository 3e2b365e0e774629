#include "fnls/report.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace fnls {

std::string format_double(double v)
{
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

void ExperimentReport::add_input(const std::string& key, double value) { inputs.emplace_back(key, format_double(value)); }

void ExperimentReport::add_check(const std::string& name, double value, const std::string& requirement, bool passed)
{
    checks.push_back({name, value, requirement, passed});
}

bool ExperimentReport::all_passed() const
{
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    return true;
}

const Check& ExperimentReport::check(const std::string& name) const
{
    for (const auto& c : checks)
        if (c.name == name)
            return c;
    throw std::out_of_range("no check named " + name);
}

const LogLogFit& ExperimentReport::fit(const std::string& name) const
{
    for (const auto& f : fits)
        if (f.name == name)
            return f.fit;
    throw std::out_of_range("no fit named " + name);
}

std::vector<double> ExperimentReport::column(const std::string& name) const
{
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c] != name)
            continue;
        std::vector<double> out;
        for (const auto& r : rows)
            out.push_back(r.at(c));
        return out;
    }
    throw std::out_of_range("no column named " + name);
}

void ExperimentReport::write_csv(std::ostream& os) const
{
    for (std::size_t c = 0; c < columns.size(); ++c)
        os << (c ? "," : "") << columns[c];
    os << '\n';
    for (const auto& r : rows) {
        for (std::size_t c = 0; c < r.size(); ++c)
            os << (c ? "," : "") << format_double(r[c]);
        os << '\n';
    }
}

void ExperimentReport::write_summary(std::ostream& os) const
{
    os << "experiment: " << experiment << "\n\n[inputs]\n";
    for (const auto& [k, v] : inputs)
        os << k << " = " << v << '\n';
    os << "\n[fits]\n";
    for (const auto& [name, f] : fits) {
        os << name << ": slope " << format_double(f.slope) << " (95% CI " << format_double(f.ci_low) << " .. "
           << format_double(f.ci_high) << "), intercept " << format_double(f.intercept) << ", residual rms "
           << format_double(f.residual_rms) << '\n';
        os << "  series:";
        for (std::size_t i = 0; i < f.x.size(); ++i)
            os << " (" << format_double(f.x[i]) << ", " << format_double(f.y[i]) << ")";
        os << '\n';
    }
    os << "\n[checks]\n";
    for (const auto& c : checks)
        os << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << format_double(c.value) << "  (" << c.requirement
           << ")\n";
    os << "\noverall: " << (all_passed() ? "PASS" : "FAIL") << '\n';
}

void ExperimentReport::write(const std::string& dir) const
{
    std::filesystem::create_directories(dir);
    std::ofstream csv(std::filesystem::path(dir) / "report.csv");
    write_csv(csv);
    std::ofstream sum(std::filesystem::path(dir) / "summary.txt");
    write_summary(sum);
    if (!csv || !sum)
        throw std::runtime_error("failed to write report under " + dir);
}

} // namespace fnls
