#include <doctest.h>

#include "fnls/evolution.hpp"
#include "fnls/observables.hpp"
#include "fnls/spectral.hpp"

#include <cmath>

using namespace fnls;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ComplexField gaussian(const Grid& g, double a = 1.0)
{
    return ComplexField::from_function(g, [a](const std::array<double, 3>& x) {
        return Complex(a * std::exp(-x[0] * x[0] / 2.0), 0.0);
    });
}

Trajectory linear_trajectory(const ComplexField& u0, double sigma, const std::vector<double>& times)
{
    Trajectory tr;
    tr.params = {u0.grid().dim(), sigma, 3.0, 1, 1.0};
    for (double t : times) {
        tr.times.push_back(t);
        tr.fields.push_back(linear_propagate(u0, t, sigma));
        tr.diagnostics.push_back({});
    }
    return tr;
}

std::vector<double> linspace(double a, double b, int n)
{
    std::vector<double> out;
    for (int i = 0; i < n; ++i)
        out.push_back(a + (b - a) * i / (n - 1));
    return out;
}

} // namespace

TEST_CASE("mass")
{
    const Grid g({32, 16}, {3.0, 5.0});
    const ComplexField one = ComplexField::from_function(g, [](const std::array<double, 3>&) { return Complex(1.0, 0.0); });
    CHECK(mass(one) == doctest::Approx(15.0).epsilon(1e-14));
    const Grid g1({128}, {20.0});
    const ComplexField u = gaussian(g1);
    CHECK(std::abs(mass(u) - std::pow(lebesgue_norm(u, 2.0), 2)) < 1e-14 * mass(u));
}

TEST_CASE("energy closed forms")
{
    const Grid g({64}, {2 * kPi * 4});
    CHECK(energy(ComplexField(g), 0.75, 1, 3.0) == 0.0);
    const double k = 3.0 * g.fundamental(0);
    const Complex A(0.7, 0.4);
    const ComplexField pw = ComplexField::from_function(g, [&](const std::array<double, 3>& x) {
        return A * std::polar(1.0, k * x[0]);
    });
    const double V = g.volume();
    for (double sigma : {0.5, 0.75, 1.0})
        for (int mu : {-1, 1}) {
            const double want = 0.5 * std::norm(A) * std::pow(k, 2 * sigma) * V
                                + mu / 6.0 * std::pow(std::abs(A), 6.0) * V;
            CHECK(energy(pw, sigma, mu, 5.0) == doctest::Approx(want).epsilon(1e-13));
        }
    CHECK_THROWS_AS(energy(pw, 0.75, 1, 1.0), std::invalid_argument);
}

TEST_CASE("sigma = 1 energy of a modulated real field shifts by |v|^2 M / 2")
{
    const Grid g({256}, {2 * kPi * 8});
    const ComplexField u = gaussian(g, 0.8);
    Eigen::VectorXd v(1);
    v << 1.5;
    const ComplexField m = modulate(u, v);
    CHECK(energy(m, 1.0, 1, 3.0) == doctest::Approx(energy(u, 1.0, 1, 3.0) + 0.5 * 2.25 * mass(u)).epsilon(1e-12));
}

TEST_CASE("spacetime norm endpoints and admissibility")
{
    const Grid g({256}, {40.0});
    const ComplexField u0 = gaussian(g);
    EvolveConfig cfg;
    cfg.params = {1, 0.75, 3.0, 1, 1.0};
    cfg.t_end = 1.0;
    cfg.dt = 0.01;
    cfg.snapshot_stride = 10;
    const Trajectory tr = evolve(u0, cfg);
    double mx = 0.0;
    for (const auto& f : tr.fields)
        mx = std::max(mx, lebesgue_norm(f, 2.0));
    SpacetimeNormSpec spec;
    spec.q = kInf;
    spec.r = 2.0;
    CHECK(spacetime_norm(tr, spec) == doctest::Approx(mx).epsilon(1e-13));

    spec.q = 2.0;
    spec.r = kInf;
    CHECK_THROWS_WITH_AS(spacetime_norm(tr, spec), "inadmissible exponent pair", Error);
    spec.q = 3.0;
    spec.r = 4.0;
    CHECK_THROWS_AS(spacetime_norm(tr, spec), Error);

    CHECK(parse_norm_variant("tilde") == NormVariant::Tilde);
    CHECK(parse_norm_variant("PLAIN") == NormVariant::Plain);
    CHECK(to_string(NormVariant::Tilde) == "tilde");
    CHECK_THROWS_AS(parse_norm_variant("wavy"), std::invalid_argument);
}

TEST_CASE("spacetime norm is monotone in the time interval")
{
    const Grid g({256}, {2 * kPi * 16});
    const Trajectory full = linear_trajectory(gaussian(g), 0.75, linspace(0.0, 4.0, 41));
    SpacetimeNormSpec spec;
    spec.q = 4.0;
    spec.r = kInf;
    double prev = 0.0;
    for (std::size_t n = 2; n <= full.size(); n += 5) {
        Trajectory part = full;
        part.times.resize(n);
        part.fields.erase(part.fields.begin() + static_cast<std::ptrdiff_t>(n), part.fields.end());
        spec.variant = NormVariant::Plain;
        const double val = spacetime_norm(part, spec);
        CHECK(val >= prev);
        prev = val;
        spec.variant = NormVariant::Tilde;
        CHECK(spacetime_norm(part, spec) > 0.0);
    }
}

TEST_CASE("tilde and plain agree on single-band data")
{
    const Grid g({512}, {2 * kPi * 16});
    // wave packet centred at |xi| = 12 with spectral width well inside one dyadic band
    const ComplexField u0 = ComplexField::from_function(g, [](const std::array<double, 3>& x) {
        return std::exp(-x[0] * x[0] / 8.0) * std::polar(1.0, 12.0 * x[0]);
    });
    const Trajectory tr = linear_trajectory(u0, 0.75, linspace(0.0, 1.0, 11));
    for (auto [q, r] : {std::pair{kInf, 2.0}, std::pair{4.0, kInf}}) {
        SpacetimeNormSpec spec;
        spec.q = q;
        spec.r = r;
        const double plain = spacetime_norm(tr, spec);
        spec.variant = NormVariant::Tilde;
        const double tilde = spacetime_norm(tr, spec);
        CHECK(tilde >= plain / 3.0);
        CHECK(tilde <= 3.0 * plain);
    }
}

TEST_CASE("linear Strichartz norm is stable under grid refinement")
{
    std::vector<double> vals;
    for (Index n : {256, 512, 1024}) {
        const Grid g({n}, {2 * kPi * 16});
        const ComplexField u0 = gaussian(g);
        const Trajectory tr = linear_trajectory(u0, 1.0, linspace(0.0, 2.0, 201));
        SpacetimeNormSpec spec;
        spec.q = 4.0;
        spec.r = kInf;
        spec.sigma = 1.0;
        const double v = spacetime_norm(tr, spec);
        CHECK(std::isfinite(v));
        CHECK(v < 2.0 * lebesgue_norm(u0, 2.0));
        vals.push_back(v);
    }
    CHECK(vals[2] == doctest::Approx(vals[1]).epsilon(1e-6));
    CHECK(vals[1] == doctest::Approx(vals[0]).epsilon(1e-3));
}

TEST_CASE("scattering defect vanishes for a linear trajectory")
{
    const Grid g({512}, {2 * kPi * 32});
    Trajectory tr = linear_trajectory(gaussian(g), 0.75, linspace(0.0, 10.0, 6));
    tr.params.p = 7.0;
    for (double d : scattering_defect(tr, 0.75))
        CHECK(d < 1e-12);
}

TEST_CASE("accumulated and direct scattering distances agree")
{
    const Grid g({1024}, {2 * kPi * 32});
    EvolveConfig cfg;
    cfg.params = {1, 0.75, 7.0, 1, 1.0};
    cfg.t_end = 4.0;
    cfg.dt = 0.01;
    cfg.snapshot_stride = 100;
    cfg.track_duhamel = true;
    const Trajectory tr = evolve(gaussian(g, 0.8), cfg);
    const auto acc = scattering_defect(tr, 0.75);
    REQUIRE(acc.size() == 4);
    for (std::size_t i = 0; i < acc.size(); ++i) {
        const double direct = scattering_distance_direct(tr, i, i + 1, 0.75);
        CHECK(acc[i] > 0.0);
        CHECK(std::abs(acc[i] - direct) < 1e-10 + 1e-8 * direct);
    }
}
