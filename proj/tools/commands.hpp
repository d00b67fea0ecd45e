#pragma once

#include <filesystem>
#include <iosfwd>

#include "fmm/raster.hpp"

namespace fmm::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kIo = 2,
  kFormat = 3,
};

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

int run_compress(const std::filesystem::path& in, const std::filesystem::path& out, Modulus k,
                 bool verbose, Streams io);
int run_decompress(const std::filesystem::path& in, const std::filesystem::path& out, Streams io);
int run_compare(const std::filesystem::path& a, const std::filesystem::path& b, Streams io);
int run_inspect(const std::filesystem::path& in, Streams io);
int run_bench(const std::filesystem::path& dir, Modulus k, Streams io);

}  // namespace fmm::cli
