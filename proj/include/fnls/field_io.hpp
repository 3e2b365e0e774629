#ifndef FNLS_FIELD_IO_HPP
#define FNLS_FIELD_IO_HPP

#include "fnls/grid.hpp"

#include <iosfwd>
#include <string>

namespace fnls {

/**
 * FNLS1 snapshot: "FNLS", u32 version (1), u32 d, per axis u64 n and f64 L,
 * then interleaved f64 (re, im) samples, row-major. Everything little-endian.
 */
void write_field(std::ostream& os, const ComplexField& u);
void write_field(const std::string& path, const ComplexField& u);

/// Throws Error("bad FNLS1 magic"), Error("unsupported FNLS1 version") or
/// Error("truncated FNLS1 stream").
ComplexField read_field(std::istream& is);
ComplexField read_field(const std::string& path);

} // namespace fnls

#endif // FNLS_FIELD_IO_HPP
