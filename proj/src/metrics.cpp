#include "fmm/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "fmm/error.hpp"

namespace fmm {

namespace {

void require_same_geometry(const RasterImage& a, const RasterImage& b) {
  if (a.width() != b.width() || a.height() != b.height() || a.channels() != b.channels()) {
    throw Error(ErrorKind::Domain, "images differ in geometry");
  }
  if (a.sample_count() == 0) throw Error(ErrorKind::Domain, "metrics of an empty image");
}

}  // namespace

double mse(const RasterImage& original, const RasterImage& reconstructed) {
  require_same_geometry(original, reconstructed);
  const auto p = original.samples();
  const auto q = reconstructed.samples();
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int d = int{p[i]} - int{q[i]};
    sum += static_cast<std::uint64_t>(d * d);
  }
  return static_cast<double>(sum) / static_cast<double>(p.size());
}

double rmse(const RasterImage& original, const RasterImage& reconstructed) {
  return std::sqrt(mse(original, reconstructed));
}

std::optional<double> psnr_from_mse(double mse_value, double peak) {
  if (mse_value < 0.0) throw Error(ErrorKind::Domain, "negative mse");
  if (mse_value == 0.0) return std::nullopt;
  return 20.0 * std::log10(peak / std::sqrt(mse_value));
}

std::optional<double> psnr(const RasterImage& original, const RasterImage& reconstructed) {
  return psnr_from_mse(mse(original, reconstructed));
}

std::optional<double> psnr_image_peak(const RasterImage& original, const RasterImage& reconstructed) {
  const double m = mse(original, reconstructed);
  const auto s = original.samples();
  return psnr_from_mse(m, *std::max_element(s.begin(), s.end()));
}

double compression_ratio(std::size_t original_size, std::size_t compressed_size) {
  if (original_size == 0 || compressed_size == 0) {
    throw Error(ErrorKind::Domain, "compression ratio needs nonzero sizes");
  }
  return static_cast<double>(original_size) / static_cast<double>(compressed_size);
}

double stddev(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorKind::Domain, "stddev of an empty sequence");
  if (values.size() == 1) return 0.0;
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

double stddev(std::span<const std::uint8_t> values) {
  std::vector<double> wide(values.begin(), values.end());
  return stddev(std::span<const double>(wide));
}

QualityReport evaluate(const RasterImage& original, const RasterImage& reconstructed,
                       std::optional<std::size_t> compressed_size) {
  QualityReport r;
  r.mse = mse(original, reconstructed);
  r.rmse = std::sqrt(r.mse);
  r.psnr = psnr_from_mse(r.mse);
  if (compressed_size) r.cr = compression_ratio(original.sample_count(), *compressed_size);
  for (std::size_t ch = 0; ch < original.channels(); ++ch) {
    r.sigma_original.push_back(stddev(original.plane(ch).samples));
    r.sigma_reconstructed.push_back(stddev(reconstructed.plane(ch).samples));
  }
  return r;
}

}  // namespace fmm
