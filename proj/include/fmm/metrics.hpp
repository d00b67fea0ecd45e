#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fmm/raster.hpp"

namespace fmm {

inline constexpr double kPeak8Bit = 255.0;

/// Mean squared sample difference over width * height * channels samples.
/// Throws ErrorKind::Domain if the geometries differ.
double mse(const RasterImage& original, const RasterImage& reconstructed);
double rmse(const RasterImage& original, const RasterImage& reconstructed);

/// 20 log10(peak / rmse). std::nullopt stands for "lossless" (mse == 0).
std::optional<double> psnr_from_mse(double mse_value, double peak = kPeak8Bit);
std::optional<double> psnr(const RasterImage& original, const RasterImage& reconstructed);
/// Same, but with the original's largest sample as the peak instead of 255.
std::optional<double> psnr_image_peak(const RasterImage& original, const RasterImage& reconstructed);

/// original / compressed. Throws ErrorKind::Domain if either is zero.
double compression_ratio(std::size_t original_size, std::size_t compressed_size);

/// Sample standard deviation (n - 1 denominator); 0 for a single value.
/// Throws ErrorKind::Domain on empty input.
double stddev(std::span<const double> values);
double stddev(std::span<const std::uint8_t> values);

struct QualityReport {
  double mse = 0.0;
  double rmse = 0.0;
  std::optional<double> psnr;  // nullopt: lossless
  std::optional<double> cr;    // set when a compressed size is known
  std::vector<double> sigma_original;       // one per channel
  std::vector<double> sigma_reconstructed;  // one per channel

  bool lossless() const noexcept { return !psnr.has_value(); }
};

QualityReport evaluate(const RasterImage& original, const RasterImage& reconstructed,
                       std::optional<std::size_t> compressed_size = std::nullopt);

}  // namespace fmm
