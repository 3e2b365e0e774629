#include "fnls/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace fnls {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

/// A number, "pi", "inf", or a product of those such as 2*pi*64.
double parse_number(const std::string& key, const std::string& text)
{
    double out = 1.0;
    std::stringstream ss(text);
    std::string factor;
    bool any = false;
    while (std::getline(ss, factor, '*')) {
        factor = trim(factor);
        if (factor == "pi") {
            out *= kPi;
        } else {
            std::size_t used = 0;
            double x = 0.0;
            try {
                x = std::stod(factor, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != factor.size())
                throw std::invalid_argument("config key " + key + ": not a number: " + text);
            out *= x;
        }
        any = true;
    }
    if (!any)
        throw std::invalid_argument("config key " + key + ": empty value");
    return out;
}

const std::set<std::string> kModelKeys{"d", "sigma", "p", "mu", "nu"};
const std::set<std::string> kProfileKeys{"profile_width", "profile_amplitude", "profile_center"};

std::set<std::string> with(std::set<std::string> base, std::initializer_list<std::set<std::string>> more)
{
    for (const auto& m : more)
        base.insert(m.begin(), m.end());
    return base;
}

ModelParams model(const Config& c, ModelParams p)
{
    p.d = static_cast<int>(c.get_int("d", p.d));
    p.sigma = c.get_double("sigma", p.sigma);
    p.p = c.get_double("p", p.p);
    p.mu = static_cast<int>(c.get_int("mu", p.mu));
    p.nu = c.get_double("nu", p.nu);
    p.validate();
    return p;
}

ProfileSpec profile(const Config& c, ProfileSpec p, const std::string& prefix = "profile")
{
    p.width = c.get_double(prefix + "_width", p.width);
    p.amplitude = c.get_double(prefix + "_amplitude", p.amplitude);
    if (c.has(prefix + "_center")) {
        const auto v = c.get_list(prefix + "_center", {});
        p.center = Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Index>(v.size()));
    }
    return p;
}

Eigen::VectorXd vector_of(const Config& c, const std::string& key, const Eigen::VectorXd& fallback)
{
    if (!c.has(key))
        return fallback;
    const auto v = c.get_list(key, {});
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Index>(v.size()));
}

} // namespace

Config Config::parse(std::istream& is)
{
    Config c;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        if (key.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": empty key");
        c.values_[key] = trim(line.substr(eq + 1));
    }
    return c;
}

Config Config::from_file(const std::string& path)
{
    std::ifstream is(path);
    if (!is)
        throw std::invalid_argument("cannot open config file " + path);
    return parse(is);
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const
{
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

double Config::get_double(const std::string& key, double fallback) const
{
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : parse_number(key, it->second);
}

long Config::get_int(const std::string& key, long fallback) const
{
    const auto it = values_.find(key);
    if (it == values_.end())
        return fallback;
    const double x = parse_number(key, it->second);
    if (x != std::round(x))
        throw std::invalid_argument("config key " + key + ": expected an integer");
    return static_cast<long>(x);
}

bool Config::get_bool(const std::string& key, bool fallback) const
{
    const auto it = values_.find(key);
    if (it == values_.end())
        return fallback;
    const std::string& v = it->second;
    if (v == "true" || v == "1" || v == "yes")
        return true;
    if (v == "false" || v == "0" || v == "no")
        return false;
    throw std::invalid_argument("config key " + key + ": expected a boolean");
}

std::vector<double> Config::get_list(const std::string& key, const std::vector<double>& fallback) const
{
    const auto it = values_.find(key);
    if (it == values_.end())
        return fallback;
    std::vector<double> out;
    std::stringstream ss(it->second);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_number(key, trim(item)));
    return out;
}

void Config::require_known(const std::set<std::string>& known) const
{
    for (const auto& [k, v] : values_)
        if (!known.count(k))
            throw std::invalid_argument("unknown config key: " + k);
}

EvolveJob evolve_job(const Config& c)
{
    c.require_known(with(kModelKeys, {kProfileKeys, {"L", "n", "t_end", "dt", "snapshot_stride",
                                                     "mass_drift_guard", "track_duhamel", "v"}}));
    EvolveJob job;
    job.evolve.params = model(c, ModelParams{});
    job.profile = profile(c, ProfileSpec::gaussian(1.0));
    job.L = c.get_double("L", job.L);
    job.n = c.get_int("n", job.n);
    job.evolve.t_end = c.get_double("t_end", job.evolve.t_end);
    job.evolve.dt = c.get_double("dt", job.evolve.dt);
    job.evolve.snapshot_stride = c.get_int("snapshot_stride", 10);
    job.evolve.mass_drift_guard = c.get_double("mass_drift_guard", job.evolve.mass_drift_guard);
    job.evolve.track_duhamel = c.get_bool("track_duhamel", false);
    job.v = vector_of(c, "v", Eigen::VectorXd());
    return job;
}

DispersiveConfig dispersive_config(const Config& c)
{
    c.require_known({"d", "sigma", "N_list", "times", "L", "n", "slope_tolerance", "prefactor_tolerance"});
    DispersiveConfig d;
    d.d = static_cast<int>(c.get_int("d", d.d));
    d.sigma = c.get_double("sigma", d.sigma);
    d.N_list = c.get_list("N_list", d.N_list);
    d.times = c.get_list("times", d.times);
    d.L = c.get_double("L", d.L);
    d.n = c.get_int("n", d.n);
    d.slope_tolerance = c.get_double("slope_tolerance", d.slope_tolerance);
    d.prefactor_tolerance = c.get_double("prefactor_tolerance", d.prefactor_tolerance);
    return d;
}

SmallDispersionConfig small_dispersion_config(const Config& c)
{
    c.require_known(with(kModelKeys, {kProfileKeys, {"L", "n", "nu_list", "t_eval", "dt", "k", "size_s",
                                                     "error_ceiling", "slope_tolerance"}}));
    SmallDispersionConfig s;
    s.params = model(c, s.params);
    s.profile = profile(c, s.profile);
    s.L = c.get_double("L", s.L);
    s.n = c.get_int("n", s.n);
    s.nu_list = c.get_list("nu_list", s.nu_list);
    s.t_eval = c.get_double("t_eval", s.t_eval);
    s.dt = c.get_double("dt", s.dt);
    s.k = static_cast<int>(c.get_int("k", s.k));
    s.size_s = c.get_double("size_s", s.size_s);
    s.error_ceiling = c.get_double("error_ceiling", s.error_ceiling);
    s.slope_tolerance = c.get_double("slope_tolerance", s.slope_tolerance);
    return s;
}

GalileanConfig galilean_config(const Config& c)
{
    c.require_known(with(kModelKeys, {kProfileKeys, {"nu_list", "v", "k", "t_eval", "dt", "L_u", "n_u", "n_phi",
                                                     "min_exponent"}}));
    GalileanConfig g;
    g.params = model(c, g.params);
    g.profile = profile(c, g.profile);
    g.nu_list = c.get_list("nu_list", g.nu_list);
    g.v = vector_of(c, "v", Eigen::VectorXd::Constant(g.params.d, 8.0));
    g.k = static_cast<int>(c.get_int("k", g.k));
    g.t_eval = c.get_double("t_eval", g.t_eval);
    g.dt = c.get_double("dt", g.dt);
    g.L_u = c.get_double("L_u", g.L_u);
    g.n_u = c.get_int("n_u", g.n_u);
    g.n_phi = c.get_int("n_phi", g.n_phi);
    g.min_exponent = c.get_double("min_exponent", g.min_exponent);
    return g;
}

DecoherenceConfig decoherence_config(const Config& c)
{
    c.require_known(with(kModelKeys,
                         {{"w_width", "w_amplitude", "w_center", "a", "a_prime", "nu_list", "alpha", "s", "epsilon", "k",
                           "T", "separation_fraction", "scan_step", "scan_max", "L_phi", "n_phi", "dt",
                           "correction_constant", "true_evolution", "true_dt", "size_band_low", "size_band_high",
                           "min_inflation", "aliasing_limit"}}));
    DecoherenceConfig d;
    d.params = model(c, d.params);
    d.w = profile(c, d.w, "w");
    d.a = c.get_double("a", d.a);
    d.a_prime = c.get_double("a_prime", d.a_prime);
    d.nu_list = c.get_list("nu_list", d.nu_list);
    d.alpha = c.get_double("alpha", d.alpha);
    d.s = c.get_double("s", d.s);
    d.epsilon = c.get_double("epsilon", d.epsilon);
    d.k = static_cast<int>(c.get_int("k", d.k));
    d.T = c.get_double("T", d.T);
    d.separation_fraction = c.get_double("separation_fraction", d.separation_fraction);
    d.scan_step = c.get_double("scan_step", d.scan_step);
    d.scan_max = c.get_double("scan_max", d.scan_max);
    d.L_phi = c.get_double("L_phi", d.L_phi);
    d.n_phi = c.get_int("n_phi", d.n_phi);
    d.dt = c.get_double("dt", d.dt);
    d.correction_constant = c.get_double("correction_constant", d.correction_constant);
    d.true_evolution = c.get_bool("true_evolution", d.true_evolution);
    d.true_dt = c.get_double("true_dt", d.true_dt);
    d.size_band_low = c.get_double("size_band_low", d.size_band_low);
    d.size_band_high = c.get_double("size_band_high", d.size_band_high);
    d.min_inflation = c.get_double("min_inflation", d.min_inflation);
    d.aliasing_limit = c.get_double("aliasing_limit", d.aliasing_limit);
    return d;
}

ScatteringConfig scattering_config(const Config& c)
{
    c.require_known(with(kModelKeys, {kProfileKeys, {"amplitudes", "t_end", "dt", "L", "n", "checkpoints"}}));
    ScatteringConfig s;
    s.params = model(c, s.params);
    s.profile = profile(c, s.profile);
    s.amplitudes = c.get_list("amplitudes", s.amplitudes);
    s.t_end = c.get_double("t_end", s.t_end);
    s.dt = c.get_double("dt", s.dt);
    s.L = c.get_double("L", s.L);
    s.n = c.get_int("n", s.n);
    s.checkpoints = c.get_list("checkpoints", s.checkpoints);
    return s;
}

SolitonJob soliton_job(const Config& c)
{
    c.require_known(with(kModelKeys, {{"omega", "v", "gamma", "max_iter", "tol", "L", "n", "plateau_window",
                                       "seed_width", "seed_amplitude", "seed_center", "check_t_end", "check_dt"}}));
    SolitonJob job;
    SolitonConfig& s = job.soliton;
    s.params = model(c, s.params);
    s.omega = c.get_double("omega", s.omega);
    s.v = vector_of(c, "v", Eigen::VectorXd::Zero(s.params.d));
    s.gamma = c.get_double("gamma", s.gamma);
    s.max_iter = static_cast<int>(c.get_int("max_iter", s.max_iter));
    s.tol = c.get_double("tol", s.tol);
    s.L = c.get_double("L", s.L);
    s.n = c.get_int("n", s.n);
    s.plateau_window = static_cast<int>(c.get_int("plateau_window", s.plateau_window));
    job.seed = profile(c, default_soliton_seed(s), "seed");
    job.check_t_end = c.get_double("check_t_end", job.check_t_end);
    job.check_dt = c.get_double("check_dt", job.check_dt);
    return job;
}

} // namespace fnls
