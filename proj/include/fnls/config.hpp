#ifndef FNLS_CONFIG_HPP
#define FNLS_CONFIG_HPP

#include "fnls/evolution.hpp"
#include "fnls/experiments.hpp"
#include "fnls/soliton.hpp"

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace fnls {

/// Plain `key = value` lines; `#` starts a comment. Lists are comma separated.
class Config
{
public:
    static Config parse(std::istream& is);
    static Config from_file(const std::string& path);

    bool has(const std::string& key) const { return values_.count(key) > 0; }
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    long get_int(const std::string& key, long fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::vector<double> get_list(const std::string& key, const std::vector<double>& fallback) const;

    /// Throws std::invalid_argument naming the first key not in `known`.
    void require_known(const std::set<std::string>& known) const;

private:
    std::map<std::string, std::string> values_;
};

// Mapping onto the typed configurations. Each also rejects unknown keys.
struct EvolveJob
{
    EvolveConfig evolve;
    ProfileSpec profile;
    double L = 40.0;
    Index n = 512;
    Eigen::VectorXd v; // optional modulation of the initial profile (empty: none)
};

EvolveJob evolve_job(const Config& c);
DispersiveConfig dispersive_config(const Config& c);
SmallDispersionConfig small_dispersion_config(const Config& c);
GalileanConfig galilean_config(const Config& c);
DecoherenceConfig decoherence_config(const Config& c);
ScatteringConfig scattering_config(const Config& c);

struct SolitonJob
{
    SolitonConfig soliton;
    ProfileSpec seed;
    double check_t_end = 1.0;
    double check_dt = 1e-3;
};

SolitonJob soliton_job(const Config& c);

} // namespace fnls

#endif // FNLS_CONFIG_HPP
