// fnls: command line front end for the fractional NLS laboratory.

#include "fnls/config.hpp"
#include "fnls/evolution.hpp"
#include "fnls/experiments.hpp"
#include "fnls/exponents.hpp"
#include "fnls/field_io.hpp"
#include "fnls/observables.hpp"
#include "fnls/profile.hpp"
#include "fnls/report.hpp"
#include "fnls/soliton.hpp"
#include "fnls/spectral.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace fnls;

namespace {

double parse_exponent(const std::string& text)
{
    if (text == "inf" || text == "infinity")
        return std::numeric_limits<double>::infinity();
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size())
        throw std::invalid_argument("not a number: " + text);
    return v;
}

std::string snapshot_name(std::size_t i)
{
    std::ostringstream os;
    os << "snapshot_" << std::setw(5) << std::setfill('0') << i << ".fnls";
    return os.str();
}

FieldSink directory_sink(const std::string& out, bool enabled)
{
    if (!enabled)
        return {};
    const fs::path dir = fs::path(out) / "fields";
    fs::create_directories(dir);
    return [dir](const std::string& label, const ComplexField& u) {
        write_field((dir / (label + ".fnls")).string(), u);
    };
}

void finish(const ExperimentReport& rep, const std::string& out)
{
    rep.write(out);
    rep.write_summary(std::cout);
}

int cmd_exponents(int d, double p, double sigma, const std::optional<double>& s)
{
    const CriticalExponents e = critical_exponents(d, p, sigma);
    std::cout << std::left;
    std::cout << std::setw(8) << "d" << ": " << d << "\n";
    std::cout << std::setw(8) << "p" << ": " << format_double(p) << "\n";
    std::cout << std::setw(8) << "sigma" << ": " << format_double(sigma) << "\n";
    std::cout << std::setw(8) << "s_c" << ": " << format_double(e.s_c) << "\n";
    std::cout << std::setw(8) << "s_g" << ": " << format_double(e.s_g) << "\n";
    std::string regime;
    if (s) {
        const RegimeReport r = classify_regime(d, p, sigma, *s);
        regime = to_string(r.regime);
        std::cout << std::setw(8) << "s" << ": " << format_double(*s) << "\n";
        std::cout << std::setw(8) << "regime" << ": " << regime << "\n";
        for (const auto& note : r.hypothesis_notes)
            std::cout << std::setw(8) << "note" << ": " << note << "\n";
    }
    std::cout << "d,p,sigma,s,s_c,s_g,regime\n";
    std::cout << d << "," << format_double(p) << "," << format_double(sigma) << ","
              << (s ? format_double(*s) : "") << "," << format_double(e.s_c) << "," << format_double(e.s_g) << ","
              << regime << "\n";
    return 0;
}

int cmd_evolve(const std::string& config, const std::string& out)
{
    const EvolveJob job = evolve_job(Config::from_file(config));
    const Grid grid = Grid::cube(job.evolve.params.d, job.n, job.L);
    ComplexField u0 = sample_profile(job.profile, grid);
    if (job.v.size() > 0)
        u0 = modulate(u0, round_to_lattice(job.v, grid));
    const Trajectory tr = evolve(u0, job.evolve);

    fs::create_directories(out);
    std::ofstream diag(fs::path(out) / "diagnostics.csv");
    diag << "time,mass,energy,linf,boundary_amplitude\n";
    std::ofstream meta(fs::path(out) / "trajectory.conf");
    const ModelParams& mp = tr.params;
    meta << "d = " << mp.d << "\nsigma = " << format_double(mp.sigma) << "\np = " << format_double(mp.p)
         << "\nmu = " << mp.mu << "\nnu = " << format_double(mp.nu) << "\ndt = " << format_double(tr.dt)
         << "\nsnapshot_stride = " << tr.snapshot_stride << "\ntimes = ";
    for (std::size_t i = 0; i < tr.size(); ++i) {
        write_field((fs::path(out) / snapshot_name(i)).string(), tr.fields[i]);
        diag << format_double(tr.times[i]) << "," << format_double(tr.diagnostics[i].mass) << ","
             << format_double(tr.diagnostics[i].energy) << ","
             << format_double(lebesgue_norm(tr.fields[i], std::numeric_limits<double>::infinity())) << ","
             << format_double(boundary_amplitude(tr.fields[i])) << "\n";
        meta << (i ? ", " : "") << format_double(tr.times[i]);
    }
    meta << "\n";
    std::cout << "wrote " << tr.size() << " snapshots to " << out << " (dt = " << format_double(tr.dt) << ")\n";
    return 0;
}

int cmd_norms(const std::string& dir, double q, double r, double s, const std::string& variant)
{
    const Config meta = Config::from_file((fs::path(dir) / "trajectory.conf").string());
    Trajectory tr;
    tr.params.d = static_cast<int>(meta.get_int("d", 1));
    tr.params.sigma = meta.get_double("sigma", 0.75);
    tr.params.p = meta.get_double("p", 3.0);
    tr.params.mu = static_cast<int>(meta.get_int("mu", 1));
    tr.params.nu = meta.get_double("nu", 1.0);
    tr.dt = meta.get_double("dt", 0.0);
    tr.snapshot_stride = meta.get_int("snapshot_stride", 1);
    tr.times = meta.get_list("times", {});
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
        tr.fields.push_back(read_field((fs::path(dir) / snapshot_name(i)).string()));
        tr.diagnostics.push_back({});
    }
    SpacetimeNormSpec spec;
    spec.q = q;
    spec.r = r;
    spec.s = s;
    spec.sigma = tr.params.sigma;
    spec.variant = parse_norm_variant(variant);
    const double value = spacetime_norm(tr, spec);

    std::ostringstream row;
    row << format_double(q) << "," << format_double(r) << "," << format_double(s) << "," << to_string(spec.variant)
        << "," << tr.snapshot_stride << "," << format_double(value);
    std::cout << "norm = " << format_double(value) << "\n";
    std::cout << "q,r,s,variant,stride,value\n" << row.str() << "\n";
    const fs::path csv = fs::path(dir) / "norms.csv";
    const bool fresh = !fs::exists(csv);
    std::ofstream os(csv, std::ios::app);
    if (fresh)
        os << "q,r,s,variant,stride,value\n";
    os << row.str() << "\n";
    return 0;
}

int cmd_soliton(const std::string& config, const std::string& out)
{
    const SolitonJob job = soliton_job(Config::from_file(config));
    const SolitonResult res = petviashvili_solve(job.soliton, job.seed);
    fs::create_directories(out);
    write_field((fs::path(out) / "Q.fnls").string(), res.Q);
    std::ofstream csv(fs::path(out) / "residuals.csv");
    csv << "iter,residual,M_n\n";
    for (std::size_t i = 0; i < res.residual_history.size(); ++i)
        csv << i + 1 << "," << format_double(res.residual_history[i]) << ","
            << format_double(res.stabilization_factor_history[i]) << "\n";

    std::ostringstream summary;
    summary << "experiment: soliton\n";
    summary << "sigma = " << format_double(job.soliton.params.sigma) << "\np = " << format_double(job.soliton.params.p)
            << "\nomega = " << format_double(job.soliton.omega) << "\nv_rounded = ";
    for (Index a = 0; a < res.v.size(); ++a)
        summary << (a ? "," : "") << format_double(res.v[a]);
    summary << "\ngamma = " << format_double(job.soliton.effective_gamma()) << "\niterations = " << res.iterations
            << "\nconverged = " << (res.converged ? "true" : "false")
            << "\nfinal_residual = " << format_double(res.residual_history.back())
            << "\nmin_symbol = " << format_double(res.min_symbol) << "\n";
    if (res.converged)
        summary << "traveling_mismatch = "
                << format_double(traveling_wave_check(res, job.soliton, job.check_t_end, job.check_dt))
                << " (t = " << format_double(job.check_t_end) << ", dt = " << format_double(job.check_dt) << ")\n";
    std::ofstream(fs::path(out) / "summary.txt") << summary.str();
    std::cout << summary.str();
    return res.converged ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Pseudo-spectral laboratory for the fractional nonlinear Schroedinger equation"};
    app.require_subcommand(1);

    int d = 1;
    double p = 3.0, sigma = 0.75;
    std::optional<double> s_opt;
    auto* ex = app.add_subcommand("exponents", "critical exponents and regime classification");
    ex->add_option("--d", d, "dimension")->required();
    ex->add_option("--p", p, "nonlinearity power")->required();
    ex->add_option("--sigma", sigma, "dispersion order")->required();
    ex->add_option("--s", s_opt, "regularity to classify");

    std::string config, out;
    auto* ev = app.add_subcommand("evolve", "split-step evolution with FNLS1 snapshots");
    ev->add_option("--config", config)->required()->check(CLI::ExistingFile);
    ev->add_option("--out", out)->required();

    std::string traj, r_text = "inf", variant = "plain";
    double q = 4.0, s = 0.0;
    auto* nm = app.add_subcommand("norms", "space-time norm of a stored trajectory");
    nm->add_option("--traj", traj)->required()->check(CLI::ExistingDirectory);
    nm->add_option("--q", q)->required();
    nm->add_option("--r", r_text, "spatial exponent (inf allowed)")->required();
    nm->add_option("--s", s);
    nm->add_option("--variant", variant, "plain or tilde");

    bool save_fields = false;
    std::map<std::string, CLI::App*> experiments;
    for (const char* name : {"dispersive", "small-dispersion", "galilean", "decohere", "scatter"}) {
        auto* sub = app.add_subcommand(name, std::string("experiment: ") + name);
        sub->add_option("--config", config)->check(CLI::ExistingFile);
        sub->add_option("--out", out)->required();
        sub->add_flag("--save-fields", save_fields, "write FNLS1 fields under <out>/fields");
        experiments[name] = sub;
    }
    auto* so = app.add_subcommand("soliton", "Petviashvili profile and traveling-wave check");
    so->add_option("--config", config)->required()->check(CLI::ExistingFile);
    so->add_option("--out", out)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ex)
            return cmd_exponents(d, p, sigma, s_opt);
        if (*ev)
            return cmd_evolve(config, out);
        if (*nm)
            return cmd_norms(traj, q, parse_exponent(r_text), s, variant);
        if (*so)
            return cmd_soliton(config, out);

        const Config c = config.empty() ? Config{} : Config::from_file(config);
        const FieldSink sink = directory_sink(out, save_fields);
        ExperimentReport rep;
        if (*experiments["dispersive"])
            rep = run_dispersive_decay(dispersive_config(c), sink);
        else if (*experiments["small-dispersion"])
            rep = run_small_dispersion(small_dispersion_config(c), sink);
        else if (*experiments["galilean"])
            rep = run_galilean_error(galilean_config(c), sink);
        else if (*experiments["decohere"])
            rep = run_decoherence(decoherence_config(c), sink);
        else
            rep = run_scattering_probe(scattering_config(c), sink);
        finish(rep, out);
        return rep.all_passed() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
