#include "fnls/field_io.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace fnls {

namespace {

template <typename T>
void put(std::ostream& os, T value)
{
    char buf[sizeof(T)];
    std::memcpy(buf, &value, sizeof(T));
    if constexpr (std::endian::native == std::endian::big)
        std::reverse(buf, buf + sizeof(T));
    os.write(buf, sizeof(T));
}

template <typename T>
T get(std::istream& is)
{
    char buf[sizeof(T)];
    if (!is.read(buf, sizeof(T)))
        throw Error("truncated FNLS1 stream");
    if constexpr (std::endian::native == std::endian::big)
        std::reverse(buf, buf + sizeof(T));
    T value;
    std::memcpy(&value, buf, sizeof(T));
    return value;
}

} // namespace

void write_field(std::ostream& os, const ComplexField& u)
{
    const Grid& g = u.grid();
    os.write("FNLS", 4);
    put<std::uint32_t>(os, 1);
    put<std::uint32_t>(os, static_cast<std::uint32_t>(g.dim()));
    for (int a = 0; a < g.dim(); ++a) {
        put<std::uint64_t>(os, static_cast<std::uint64_t>(g.points(a)));
        put<double>(os, g.extent(a));
    }
    for (Index i = 0; i < u.size(); ++i) {
        put<double>(os, u.values()[i].real());
        put<double>(os, u.values()[i].imag());
    }
    if (!os)
        throw Error("failed to write FNLS1 stream");
}

void write_field(const std::string& path, const ComplexField& u)
{
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw Error("cannot open " + path + " for writing");
    write_field(os, u);
}

ComplexField read_field(std::istream& is)
{
    char magic[4];
    if (!is.read(magic, 4))
        throw Error("truncated FNLS1 stream");
    if (std::memcmp(magic, "FNLS", 4) != 0)
        throw Error("bad FNLS1 magic");
    if (get<std::uint32_t>(is) != 1)
        throw Error("unsupported FNLS1 version");
    const auto d = get<std::uint32_t>(is);
    if (d < 1 || d > 3)
        throw Error("bad FNLS1 dimension");
    std::vector<Index> points(d);
    std::vector<double> extents(d);
    for (std::uint32_t a = 0; a < d; ++a) {
        points[a] = static_cast<Index>(get<std::uint64_t>(is));
        extents[a] = get<double>(is);
    }
    Grid grid(points, extents);
    Eigen::ArrayXcd values(grid.size());
    for (Index i = 0; i < grid.size(); ++i) {
        const double re = get<double>(is);
        const double im = get<double>(is);
        values[i] = Complex(re, im);
    }
    return ComplexField(grid, std::move(values));
}

ComplexField read_field(const std::string& path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw Error("cannot open " + path);
    return read_field(is);
}

} // namespace fnls
