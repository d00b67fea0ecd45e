#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "fmm/raster.hpp"

namespace fmm {

/// Parses binary PGM (P5, one channel) or PPM (P6, three channels). Header
/// tokens may be separated by any whitespace and '#' comments; maxval must
/// be 255. Bytes past the declared payload are ignored. Throws
/// ErrorKind::Parse with a message naming the offending field.
RasterImage read_netpbm(std::span<const std::uint8_t> data);

/// Canonical form: "P5\n<w> <h>\n255\n" (or P6) followed by the samples.
std::vector<std::uint8_t> write_netpbm(const RasterImage& image);

/// Whole-file helpers; throw ErrorKind::Io.
std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace fmm
