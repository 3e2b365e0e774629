#include <doctest.h>

#include "fnls/field_io.hpp"
#include "fnls/grid.hpp"

#include <cmath>
#include <sstream>

using namespace fnls;

TEST_CASE("grid validates point counts, extents and the budget")
{
    CHECK_THROWS_AS(Grid({12}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(Grid({4}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(Grid({16}, {-1.0}), std::invalid_argument);
    CHECK_THROWS_AS(Grid({16, 16}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(Grid({64, 64}, {1.0, 1.0}, 1000), std::invalid_argument);
    CHECK_NOTHROW(Grid({16, 8, 32}, {1.0, 2.0, 3.0}));
}

TEST_CASE("wavenumber lattice with positive Nyquist")
{
    const Grid g({8}, {2.0 * kPi});
    std::vector<double> k;
    for (Index i = 0; i < 8; ++i)
        k.push_back(g.wavenumber(0, i));
    CHECK(k == std::vector<double>{0, 1, 2, 3, 4, -3, -2, -1});
    CHECK(g.coordinate(0, 0) == doctest::Approx(-kPi));
    CHECK(g.max_wavenumber() == doctest::Approx(4.0));
    CHECK(g.min_wavenumber() == doctest::Approx(1.0));
}

TEST_CASE("row-major layout, last axis fastest")
{
    const Grid g({8, 16}, {1.0, 1.0});
    CHECK(g.stride(0) == 16);
    CHECK(g.stride(1) == 1);
    Index seen = 0;
    g.for_each_index([&](Index flat, const std::array<Index, 3>& idx) {
        CHECK(flat == idx[0] * 16 + idx[1]);
        ++seen;
    });
    CHECK(seen == g.size());
}

TEST_CASE("field arithmetic and finiteness")
{
    const Grid g = Grid::cube(1, 8, 1.0);
    ComplexField a(g, Eigen::ArrayXcd::Constant(8, Complex(1.0, 2.0)));
    ComplexField b = Complex(2.0, 0.0) * a;
    CHECK(std::abs((b - a).values()[3] - Complex(1.0, 2.0)) == 0.0);
    CHECK(std::abs(conj(a).values()[0] - Complex(1.0, -2.0)) == 0.0);
    CHECK_THROWS_AS(ComplexField(g, Eigen::ArrayXcd::Zero(7)), std::invalid_argument);
    CHECK_THROWS_AS(a += ComplexField(Grid::cube(1, 16, 1.0)), std::invalid_argument);
    a.values()[2] = Complex(std::nan(""), 0.0);
    CHECK_FALSE(a.all_finite());
    CHECK_THROWS_WITH_AS(a.require_finite(), "nonfinite field", Error);
}

TEST_CASE("model parameters are validated")
{
    ModelParams p;
    CHECK_NOTHROW(p.validate());
    p.sigma = 1.2;
    CHECK_THROWS(p.validate());
    p = ModelParams{};
    p.mu = 0;
    CHECK_THROWS(p.validate());
    p = ModelParams{};
    p.nu = 1.5;
    CHECK_THROWS(p.validate());
    p = ModelParams{};
    p.p = 1.0;
    CHECK_THROWS(p.validate());
}

TEST_CASE("FNLS1 round trip and byte layout")
{
    const Grid g({8, 16}, {1.5, 2.5});
    const ComplexField u = ComplexField::from_function(g, [](const std::array<double, 3>& x) {
        return Complex(x[0], x[1] * x[1]);
    });
    std::stringstream ss;
    write_field(ss, u);
    const std::string bytes = ss.str();
    CHECK(bytes.size() == 4 + 4 + 4 + 2 * 16 + 16 * g.size());
    CHECK(bytes.substr(0, 4) == "FNLS");
    CHECK(bytes[4] == 1);
    CHECK(bytes[8] == 2);
    const ComplexField back = read_field(ss);
    CHECK(back.grid() == g);
    CHECK((back.values() - u.values()).abs().maxCoeff() == 0.0);
}

TEST_CASE("FNLS1 rejects malformed streams")
{
    std::stringstream bad("XXXX");
    CHECK_THROWS_WITH_AS(read_field(bad), "bad FNLS1 magic", Error);

    const ComplexField u(Grid::cube(1, 8, 1.0));
    std::stringstream ss;
    write_field(ss, u);
    std::string bytes = ss.str();
    std::stringstream truncated(bytes.substr(0, bytes.size() - 3));
    CHECK_THROWS_WITH_AS(read_field(truncated), "truncated FNLS1 stream", Error);
    bytes[4] = 2;
    std::stringstream version(bytes);
    CHECK_THROWS_WITH_AS(read_field(version), "unsupported FNLS1 version", Error);
}
