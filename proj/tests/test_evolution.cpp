#include <doctest.h>

#include "oracles.hpp"

#include "fnls/evolution.hpp"
#include "fnls/exponents.hpp"
#include "fnls/fit.hpp"
#include "fnls/observables.hpp"
#include "fnls/profile.hpp"
#include "fnls/spectral.hpp"

#include <cmath>

using namespace fnls;

namespace {

double rel(const ComplexField& a, const ComplexField& b)
{
    return (a.values() - b.values()).matrix().norm() / b.values().matrix().norm();
}

ComplexField chirped(const Grid& g)
{
    return ComplexField::from_function(g, [](const std::array<double, 3>& x) {
        return std::exp(-x[0] * x[0] / 2.0) * Complex(1.0, 0.3 * x[0]);
    });
}

} // namespace

TEST_CASE("linear flow: identity, group property, unitarity")
{
    const Grid g({256}, {40.0});
    const ComplexField u = chirped(g);
    CHECK(rel(linear_propagate(u, 0.0, 0.75), u) == 0.0);
    const ComplexField a = linear_propagate(linear_propagate(u, 0.3, 0.75), 0.5, 0.75);
    CHECK(rel(a, linear_propagate(u, 0.8, 0.75)) < 1e-13);
    CHECK(rel(linear_propagate(a, -0.8, 0.75), u) < 1e-13);
    CHECK(mass(a) == doctest::Approx(mass(u)).epsilon(1e-13));

    // against the direct DFT oracle
    const Grid small({16}, {9.0});
    const ComplexField v = chirped(small);
    const auto direct = oracle::direct_multiplier(v, [](const std::array<double, 3>& xi) {
        return std::polar(1.0, 0.7 * std::pow(0.5, 1.5) * std::pow(std::abs(xi[0]), 1.5));
    });
    CHECK(rel(linear_propagate(v, 0.7, 0.75, 0.5), ComplexField(small, direct)) < 1e-12);
}

TEST_CASE("nonlinear phase rotation")
{
    const Grid g({64}, {20.0});
    const ComplexField u = chirped(g);
    for (double p : {3.0, 5.0, 3.5, 7.0}) {
        const ComplexField r = nonlinear_phase(u, 0.4, -1, p);
        for (Index i = 0; i < g.size(); ++i) {
            const Complex z = u.values()[i];
            const Complex want = z * std::polar(1.0, -0.4 * std::pow(std::abs(z), p - 1.0));
            CHECK(std::abs(r.values()[i] - want) < 1e-14);
        }
    }
    const ComplexField flat = ComplexField::from_function(g, [](const std::array<double, 3>&) {
        return Complex(0.8, -0.2);
    });
    const Complex A(0.8, -0.2);
    const ComplexField rf = nonlinear_phase(flat, 1.3, 1, 3.0);
    CHECK((rf.values() - A * std::polar(1.0, 1.3 * std::norm(A))).abs().maxCoeff() < 1e-15);
    const ComplexField real_g = ComplexField::from_function(g, [](const std::array<double, 3>& x) {
        return Complex(std::exp(-x[0] * x[0]), 0.0);
    });
    const ComplexField rg = nonlinear_phase(real_g, 0.9, 1, 3.0);
    for (Index i = 0; i < g.size(); ++i) {
        const double a = real_g.values()[i].real();
        CHECK(std::abs(rg.values()[i] - a * std::polar(1.0, 0.9 * a * a)) <= 1e-15);
        CHECK(std::abs(std::abs(rg.values()[i]) - a) <= 1e-15);
    }
    ComplexField zero(g);
    CHECK(nonlinear_phase(zero, 1.0, 1, 1.5).values().abs().maxCoeff() == 0.0);
    CHECK_THROWS_AS(nonlinear_phase(u, 1.0, 1, 1.0), std::invalid_argument);
}

TEST_CASE("zero dispersion reduces to the exact rotation")
{
    const Grid g({128}, {30.0});
    const ComplexField u0 = chirped(g);
    EvolveConfig cfg;
    cfg.params = {1, 0.75, 3.0, 1, 0.0};
    cfg.t_end = 1.0;
    cfg.dt = 0.01;
    const Trajectory tr = evolve(u0, cfg);
    const ComplexField exact = nonlinear_phase(u0, 1.0, 1, 3.0);
    CHECK(rel(tr.final_field(), exact) < 1e-13);
}

TEST_CASE("Strang step with negative dt inverts the step")
{
    const Grid g({128}, {30.0});
    const ComplexField u0 = chirped(g);
    const ModelParams mp{1, 0.6, 3.0, 1, 1.0};
    ComplexField zero(g);
    CHECK(strang_step(zero, 0.05, mp).values().abs().maxCoeff() == 0.0);
    CHECK(rel(strang_step(strang_step(u0, 0.05, mp), -0.05, mp), u0) < 1e-13);
}

TEST_CASE("opposite signs of mu give conjugate zero-dispersion flows for real data")
{
    const Grid g({128}, {30.0});
    const ComplexField u0 = ComplexField::from_function(g, [](const std::array<double, 3>& x) {
        return Complex(std::exp(-x[0] * x[0] / 2.0), 0.0);
    });
    EvolveConfig plus;
    plus.params = {1, 0.75, 3.0, 1, 0.0};
    plus.t_end = 1.0;
    plus.dt = 0.05;
    plus.snapshot_stride = 5;
    EvolveConfig minus = plus;
    minus.params.mu = -1;
    const Trajectory a = evolve(u0, plus);
    const Trajectory b = evolve(u0, minus);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK((a.fields[i].values() - b.fields[i].values().conjugate()).abs().maxCoeff() < 1e-12);
}

TEST_CASE("evolution is time reversible through conjugation")
{
    const Grid g({256}, {40.0});
    const ComplexField u0 = chirped(g);
    EvolveConfig cfg;
    cfg.params = {1, 0.75, 3.0, 1, 1.0};
    cfg.t_end = 1.0;
    cfg.dt = 0.01;
    const ComplexField u1 = evolve(u0, cfg).final_field();
    const ComplexField back = conj(evolve(conj(u1), cfg).final_field());
    CHECK(rel(back, u0) < 1e-12);
}

TEST_CASE("split step agrees with the integrating-factor RK4 oracle")
{
    const Grid g({128}, {40.0});
    const ComplexField u0 = chirped(g);
    for (const ModelParams mp : {ModelParams{1, 0.75, 3.0, 1, 1.0}, ModelParams{1, 0.6, 5.0, -1, 0.5}}) {
        const ComplexField ref = oracle::ifrk4(u0, mp, 0.5, 1e-3);
        EvolveConfig cfg;
        cfg.params = mp;
        cfg.t_end = 0.5;
        cfg.dt = 1e-4;
        CHECK(rel(evolve(u0, cfg).final_field(), ref) < 1e-7);
    }
}

TEST_CASE("small-amplitude cubic NLS agrees with the oracle to 1e-8")
{
    const Grid g({128}, {40.0});
    const ComplexField u0 = 0.1 * chirped(g);
    const ModelParams mp{1, 1.0, 3.0, 1, 1.0};
    const ComplexField ref = oracle::ifrk4(u0, mp, 1.0, 1e-4);
    EvolveConfig cfg;
    cfg.params = mp;
    cfg.t_end = 1.0;
    cfg.dt = 1e-3;
    CHECK(rel(evolve(u0, cfg).final_field(), ref) < 1e-8);
}

TEST_CASE("second-order self convergence")
{
    const Grid g({256}, {40.0});
    const ComplexField u0 = chirped(g);
    EvolveConfig cfg;
    cfg.params = {1, 0.75, 3.0, 1, 1.0};
    cfg.t_end = 1.0;
    cfg.dt = 0.0025 / 16;
    const ComplexField ref = evolve(u0, cfg).final_field();
    std::vector<double> dts{0.02, 0.01, 0.005, 0.0025};
    std::vector<double> errs;
    for (double dt : dts) {
        cfg.dt = dt;
        errs.push_back(rel(evolve(u0, cfg).final_field(), ref));
    }
    const LogLogFit f = fit_loglog(dts, errs);
    CHECK(f.slope == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("mass is conserved and energy drift shrinks with dt")
{
    const Grid g({256}, {40.0});
    const ComplexField u0 = chirped(g);
    EvolveConfig cfg;
    cfg.params = {1, 0.75, 3.0, 1, 1.0};
    cfg.t_end = 2.0;
    std::vector<double> drift;
    for (double dt : {0.02, 0.01, 0.005}) {
        cfg.dt = dt;
        const Trajectory tr = evolve(u0, cfg);
        const double m0 = tr.diagnostics.front().mass;
        const double e0 = tr.diagnostics.front().energy;
        double worst = 0.0;
        for (const auto& dg : tr.diagnostics) {
            CHECK(std::abs(dg.mass - m0) / m0 < 1e-12);
            worst = std::max(worst, std::abs(dg.energy - e0) / std::abs(e0));
        }
        drift.push_back(worst);
    }
    CHECK(drift[0] / drift[1] > 3.0);
    CHECK(drift[1] / drift[2] > 3.0);
}

TEST_CASE("snapshots, final step landing, guards")
{
    const Grid g({64}, {20.0});
    const ComplexField u0 = chirped(g);
    EvolveConfig cfg;
    cfg.params = {1, 0.75, 3.0, 1, 1.0};
    cfg.t_end = 1.0;
    cfg.dt = 0.3;
    cfg.snapshot_stride = 2;
    const Trajectory tr = evolve(u0, cfg);
    REQUIRE(tr.size() == 3);
    CHECK(tr.times[1] == doctest::Approx(0.6));
    CHECK(tr.times[2] == 1.0);
    CHECK(tr.index_near(0.55) == 1);

    cfg.snapshot_stride = 1;
    cfg.dt = 0.01;
    cfg.mass_drift_guard = 0.0;
    CHECK_THROWS_WITH_AS(evolve(u0, cfg), "mass drift guard tripped", Error);

    ComplexField bad = u0;
    bad.values()[3] = Complex(std::nan(""), 0.0);
    cfg.mass_drift_guard = 1e-8;
    CHECK_THROWS_WITH_AS(evolve(bad, cfg), "nonfinite field", Error);

    cfg.dt = 2.0;
    CHECK_THROWS_AS(evolve(u0, cfg), std::invalid_argument);
    CHECK(default_dt(g, 0.5, 1.0) == doctest::Approx(std::min(0.1 * std::sqrt(20.0 / 64.0), 0.01)));
}

TEST_CASE("scaling transform preserves the critical homogeneous norm")
{
    const Grid g({512}, {40.0});
    const ComplexField u = chirped(g);
    const ModelParams mp{1, 0.75, 7.0, 1, 1.0};
    const double sc = critical_exponents(1, mp.p, mp.sigma).s_c;
    const double before = sobolev_norm(u, sc, 2.0, Homogeneity::Homogeneous);
    CHECK(rel(scaling_transform(u, 1.0, mp), u) == 0.0);
    for (double lambda : {0.5, 2.0, 4.0}) {
        const ComplexField v = scaling_transform(u, lambda, mp);
        CHECK(v.grid().extent(0) == doctest::Approx(40.0 * lambda));
        CHECK(sobolev_norm(v, sc, 2.0, Homogeneity::Homogeneous) == doctest::Approx(before).epsilon(1e-12));
    }
    const ComplexField up = scaling_transform(u, 2.0, mp, std::vector<Index>{1024});
    CHECK(sobolev_norm(up, sc, 2.0, Homogeneity::Homogeneous) == doctest::Approx(before).epsilon(1e-10));
    CHECK_THROWS_AS(scaling_transform(u, 3.0, mp), std::invalid_argument);
    CHECK(scaling_time_map(1.0, 4.0, 0.5) == doctest::Approx(0.25));
}

TEST_CASE("scaled initial data evolves into the scaled solution")
{
    const Grid g({256}, {40.0});
    const ComplexField u0 = chirped(g);
    const ModelParams mp{1, 0.75, 3.0, 1, 1.0};
    const double lambda = 2.0;
    EvolveConfig cfg;
    cfg.params = mp;
    cfg.t_end = 0.5;
    cfg.dt = 0.005;
    const ComplexField a = scaling_transform(evolve(u0, cfg).final_field(), lambda, mp);

    EvolveConfig scaled = cfg;
    scaled.t_end = cfg.t_end * std::pow(lambda, 2.0 * mp.sigma);
    scaled.dt = cfg.dt * std::pow(lambda, 2.0 * mp.sigma);
    const ComplexField b = evolve(scaling_transform(u0, lambda, mp), scaled).final_field();
    CHECK(scaling_time_map(scaled.t_end, lambda, mp.sigma) == doctest::Approx(cfg.t_end));
    CHECK(rel(b, a) < 1e-12);
}

TEST_CASE("Duhamel accumulator matches the pulled-back difference")
{
    const Grid g({256}, {2 * kPi * 8});
    const ComplexField u0 = chirped(g);
    EvolveConfig cfg;
    cfg.params = {1, 0.75, 7.0, 1, 1.0};
    cfg.t_end = 1.0;
    cfg.dt = 0.01;
    cfg.snapshot_stride = 25;
    cfg.track_duhamel = true;
    const Trajectory tr = evolve(u0, cfg);
    REQUIRE(tr.duhamel);
    REQUIRE(tr.duhamel->size() == tr.size());
    for (std::size_t i = 0; i < tr.size(); ++i) {
        const ComplexField pulled = linear_propagate(tr.fields[i], -tr.times[i], 0.75) - u0;
        CHECK(lebesgue_norm(pulled - (*tr.duhamel)[i], 2.0) / lebesgue_norm(u0, 2.0) < 1e-13);
    }
    cfg.track_duhamel = false;
    CHECK(rel(evolve(u0, cfg).final_field(), tr.final_field()) < 1e-13);
}
