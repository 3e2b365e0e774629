#include <doctest.h>

#include "fnls/config.hpp"

#include <sstream>

using namespace fnls;

namespace {

Config parse(const std::string& text)
{
    std::istringstream is(text);
    return Config::parse(is);
}

} // namespace

TEST_CASE("parsing values, comments and lists")
{
    const Config c = parse("# header\n"
                           "L = 2*pi*64   # trailing comment\n"
                           "n=2048\n"
                           "\n"
                           "nu_list = 0.1, 0.05 ,0.025\n"
                           "r = inf\n"
                           "track_duhamel = yes\n"
                           "name = run one\n");
    CHECK(c.get_double("L", 0.0) == doctest::Approx(2 * kPi * 64));
    CHECK(c.get_int("n", 0) == 2048);
    CHECK(c.get_list("nu_list", {}) == std::vector<double>{0.1, 0.05, 0.025});
    CHECK(std::isinf(c.get_double("r", 0.0)));
    CHECK(c.get_bool("track_duhamel", false));
    CHECK(c.get_string("name", "") == "run one");
    CHECK(c.get_double("missing", 4.5) == 4.5);
    CHECK_FALSE(c.has("missing"));
}

TEST_CASE("malformed input is rejected")
{
    CHECK_THROWS_AS(parse("just words\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse(" = 3\n"), std::invalid_argument);
    const Config c = parse("n = 3.5\nflag = maybe\nx = abc\n");
    CHECK_THROWS_AS(c.get_int("n", 0), std::invalid_argument);
    CHECK_THROWS_AS(c.get_bool("flag", false), std::invalid_argument);
    CHECK_THROWS_AS(c.get_double("x", 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Config::from_file("/nonexistent/fnls.conf"), std::invalid_argument);
}

TEST_CASE("typed mappers read their keys and reject unknown ones")
{
    const EvolveJob job = evolve_job(parse("sigma = 0.6\np = 5\nmu = -1\nL = 30\nn = 256\nt_end = 2\n"
                                           "dt = 0.01\nprofile_width = 2\nv = 1.5\n"));
    CHECK(job.evolve.params.sigma == 0.6);
    CHECK(job.evolve.params.mu == -1);
    CHECK(job.n == 256);
    CHECK(job.evolve.snapshot_stride == 10);
    CHECK(job.profile.width == 2.0);
    REQUIRE(job.v.size() == 1);
    CHECK(job.v[0] == 1.5);
    CHECK_THROWS_WITH_AS(evolve_job(parse("sigmaa = 0.6\n")), "unknown config key: sigmaa", std::invalid_argument);

    const DecoherenceConfig d = decoherence_config(parse("epsilon = 2\nalpha = 0.3\nw_width = 1.5\nnu_list = 0.1, 0.05, 0.02\n"));
    CHECK(d.epsilon == 2.0);
    CHECK(d.alpha == 0.3);
    CHECK(d.w.width == 1.5);
    CHECK(d.nu_list.size() == 3);

    const SolitonJob s = soliton_job(parse("sigma = 1\nv = 0.5\nseed_amplitude = 2\n"));
    CHECK(s.soliton.params.sigma == 1.0);
    CHECK(s.soliton.params.mu == -1);
    CHECK(s.soliton.v[0] == 0.5);
    CHECK(s.seed.amplitude == 2.0);
    CHECK(s.seed.width == 1.0);

    CHECK(dispersive_config(parse("N_list = 1, 2, 4\n")).N_list.size() == 3);
    CHECK(scattering_config(parse("amplitudes = 0, 0.01\n")).amplitudes.size() == 2);
    CHECK(galilean_config(parse("v = 4\n")).v[0] == 4.0);
    CHECK(small_dispersion_config(parse("k = 2\n")).k == 2);
    CHECK_THROWS_AS(scattering_config(parse("omega = 1\n")), std::invalid_argument);
}
