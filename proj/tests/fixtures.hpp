#pragma once

// Shared fixtures and test-only oracles. Oracles here never call into the
// codec's own quantization or bit packing.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <vector>

#include "fmm/raster.hpp"

namespace fmm::testing {

using Block8 = std::array<std::array<int, 8>, 8>;

// Worked 8x8 example: original samples.
inline constexpr Block8 kSampleBlock = {{
    {221, 232, 231, 242, 246, 247, 251, 250},
    {220, 227, 231, 236, 242, 241, 250, 251},
    {221, 215, 221, 232, 240, 247, 251, 251},
    {217, 216, 216, 225, 237, 241, 245, 247},
    {216, 221, 217, 222, 231, 235, 242, 247},
    {220, 216, 222, 215, 227, 231, 242, 247},
    {216, 216, 211, 216, 222, 227, 237, 247},
    {217, 216, 211, 216, 217, 222, 237, 235},
}};

// The same block as printed after quantization to multiples of 5.
inline constexpr Block8 kSampleBlockQuantized = {{
    {220, 230, 230, 240, 245, 245, 250, 250},
    {220, 225, 230, 235, 240, 245, 250, 250},
    {220, 215, 220, 230, 240, 245, 250, 250},
    {215, 215, 215, 225, 235, 240, 245, 245},
    {215, 220, 215, 220, 230, 235, 240, 245},
    {220, 215, 220, 215, 225, 230, 240, 245},
    {215, 215, 210, 215, 220, 225, 235, 245},
    {215, 215, 210, 215, 215, 220, 235, 235},
}};

// Printed quantized block divided by 5.
inline constexpr Block8 kSampleBlockIndices = {{
    {44, 46, 46, 48, 49, 49, 50, 50},
    {44, 45, 46, 47, 48, 49, 50, 50},
    {44, 43, 44, 46, 48, 49, 50, 50},
    {43, 43, 43, 45, 47, 48, 49, 49},
    {43, 44, 43, 44, 46, 47, 48, 49},
    {44, 43, 44, 43, 45, 46, 48, 49},
    {43, 43, 42, 43, 44, 45, 47, 49},
    {43, 43, 42, 43, 43, 44, 47, 47},
}};

// Printed indices minus their minimum (42).
inline constexpr Block8 kSampleBlockDeltas = {{
    {2, 4, 4, 6, 7, 7, 8, 8},
    {2, 3, 4, 5, 6, 7, 8, 8},
    {2, 1, 2, 4, 6, 7, 8, 8},
    {1, 1, 1, 3, 5, 6, 7, 7},
    {1, 2, 1, 2, 4, 5, 6, 7},
    {2, 1, 2, 1, 3, 4, 6, 7},
    {1, 1, 0, 1, 2, 3, 5, 7},
    {1, 1, 0, 1, 1, 2, 5, 5},
}};

// The printed quantized table disagrees with the quantization rule at one
// cell: 241 has remainder 1 and maps to 240, but 245 is printed there (and
// carried into the index and delta tables as 49 and 7).
inline constexpr int kMisprintRow = 1;
inline constexpr int kMisprintCol = 5;

inline std::vector<std::uint8_t> flatten(const Block8& b) {
  std::vector<std::uint8_t> out;
  for (const auto& row : b) {
    for (int v : row) out.push_back(static_cast<std::uint8_t>(v));
  }
  return out;
}

inline ChannelPlane as_plane(const Block8& b) { return ChannelPlane(8, 8, flatten(b)); }
inline RasterImage as_image(const Block8& b) { return RasterImage(8, 8, 1, flatten(b)); }

/// Brute force: the multiple of k in [0, 255] closest to v.
inline int nearest_multiple_oracle(int v, int k) {
  int best = 0;
  for (int m = 0; m <= 255; m += k) {
    if (std::abs(m - v) < std::abs(best - v)) best = m;
  }
  return best;
}

inline RasterImage random_image(std::mt19937& rng, std::size_t width, std::size_t height,
                                std::size_t channels) {
  std::uniform_int_distribution<int> sample(0, 255);
  std::vector<std::uint8_t> data(width * height * channels);
  for (auto& v : data) v = static_cast<std::uint8_t>(sample(rng));
  return RasterImage(width, height, channels, std::move(data));
}

/// Random image with dimensions in [1, max_dim] and 1 or 3 channels.
inline RasterImage random_image(std::mt19937& rng, std::size_t max_dim = 64) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::bernoulli_distribution rgb(0.5);
  const std::size_t w = dim(rng);
  const std::size_t h = dim(rng);
  return random_image(rng, w, h, rgb(rng) ? 3 : 1);
}

/// Smooth gradients plus a low-frequency ripple plus Gaussian noise of the
/// given standard deviation, clamped to [0, 255]. Channels get offset
/// gradients so RGB planes differ.
inline RasterImage synthetic_photo(std::mt19937& rng, std::size_t width, std::size_t height,
                                   std::size_t channels, double noise_sigma) {
  std::normal_distribution<double> noise(0.0, noise_sigma);
  RasterImage img(width, height, channels);
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const double fx = static_cast<double>(x) / static_cast<double>(width);
      const double fy = static_cast<double>(y) / static_cast<double>(height);
      for (std::size_t ch = 0; ch < channels; ++ch) {
        const double base = 60.0 + 20.0 * static_cast<double>(ch) + 120.0 * fx + 40.0 * fy +
                            30.0 * std::sin(static_cast<double>(x) / 17.0) * std::cos(static_cast<double>(y) / 23.0);
        const double v = std::round(base + noise(rng));
        img.at(y, x, ch) = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
      }
    }
  }
  return img;
}

}  // namespace fmm::testing
