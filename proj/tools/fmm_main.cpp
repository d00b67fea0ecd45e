#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "fmm/raster.hpp"

int main(int argc, char** argv) {
  CLI::App app{"fmm - five-modulus lossy image codec"};
  app.require_subcommand(1);

  int modulus = fmm::Modulus::kDefault;
  bool verbose = false;
  std::string in;
  std::string out;
  std::string other;

  const auto odd_modulus = CLI::Validator(
      [](std::string& s) -> std::string {
        try {
          if (fmm::Modulus::is_valid(std::stoi(s))) return {};
        } catch (const std::exception&) {
        }
        return "modulus must be an odd integer in [3, 127]";
      },
      "ODD 3..127");

  auto* compress = app.add_subcommand("compress", "PGM/PPM -> .fmm");
  compress->add_option("input", in, "input PGM/PPM")->required();
  compress->add_option("output", out, "output .fmm")->required();
  compress->add_option("-k,--modulus", modulus, "quantization modulus")->check(odd_modulus);
  compress->add_flag("-v,--verbose", verbose, "print per-channel stream sizes");

  auto* decompress = app.add_subcommand("decompress", ".fmm -> PGM/PPM");
  decompress->add_option("input", in, "input .fmm")->required();
  decompress->add_option("output", out, "output PGM/PPM")->required();

  auto* compare = app.add_subcommand("compare", "quality metrics between two images");
  compare->add_option("a", in, "first PGM/PPM")->required();
  compare->add_option("b", other, "second PGM/PPM")->required();

  auto* inspect = app.add_subcommand("inspect", "dump per-block stream fields");
  inspect->add_option("input", in, "input .fmm")->required();

  auto* bench = app.add_subcommand("bench", "PSNR and CR over a directory of images");
  bench->add_option("dir", in, "directory of PGM/PPM files")->required();
  bench->add_option("-k,--modulus", modulus, "quantization modulus")->check(odd_modulus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? fmm::cli::kOk : fmm::cli::kUsage;
  }

  const fmm::cli::Streams io{std::cout, std::cerr};
  const fmm::Modulus k(modulus);
  if (*compress) return fmm::cli::run_compress(in, out, k, verbose, io);
  if (*decompress) return fmm::cli::run_decompress(in, out, io);
  if (*compare) return fmm::cli::run_compare(in, other, io);
  if (*inspect) return fmm::cli::run_inspect(in, io);
  if (*bench) return fmm::cli::run_bench(in, k, io);
  return fmm::cli::kUsage;
}
