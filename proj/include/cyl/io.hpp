#pragma once

#include <filesystem>
#include <iosfwd>
#include <variant>

#include "cyl/field.hpp"

namespace cyl {

using AnyGridArray = std::variant<SampledField, TorusSpectrum, LineSpectrum, MixedSpectrum>;

FieldKind kind_of(const AnyGridArray& a);
const CylinderGrid& grid_of(const AnyGridArray& a);

/// Shared binary format: magic "CYLF", u32 version=1, u32 n_t, u32 n_x,
/// f64 X, u8 kind, then n_t*n_x little-endian f64 (re, im) pairs in
/// row-major order (rows ascending t or k, columns ascending x or xi).
/// Writes go to a temp file first and are renamed into place, so a failed
/// command never leaves a partial output behind.
void write_binary(const std::filesystem::path& path, const AnyGridArray& a);
AnyGridArray read_binary(const std::filesystem::path& path);

/// CSV mirror with header `row,col,re,im`, same ordering.
void write_csv(std::ostream& os, const AnyGridArray& a);
void write_csv(const std::filesystem::path& path, const AnyGridArray& a);

/// Helper shared by every file-producing command: atomic text write.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

} // namespace cyl
