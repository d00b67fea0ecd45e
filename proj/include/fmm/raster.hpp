#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fmm {

/// Quantization step. Always odd and within [3, 127]; 5 is the classic
/// five-modulus setting.
class Modulus {
 public:
  static constexpr int kMin = 3;
  static constexpr int kMax = 127;
  static constexpr int kDefault = 5;

  constexpr Modulus() = default;
  /// Throws Error(ErrorKind::Modulus) for even or out-of-range k.
  explicit Modulus(int k);

  constexpr int value() const noexcept { return k_; }
  /// Largest index after division, floor(255 / k).
  constexpr int max_index() const noexcept { return 255 / k_; }
  /// Width of the min/max protocol fields, bit_length(max_index()).
  int field_bits() const noexcept;

  static bool is_valid(int k) noexcept { return k >= kMin && k <= kMax && k % 2 == 1; }

  friend constexpr bool operator==(Modulus, Modulus) = default;

 private:
  int k_ = kDefault;
};

/// A single color plane, row-major.
struct ChannelPlane {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> samples;

  ChannelPlane() = default;
  ChannelPlane(std::size_t w, std::size_t h);
  ChannelPlane(std::size_t w, std::size_t h, std::vector<std::uint8_t> data);

  std::uint8_t at(std::size_t row, std::size_t col) const { return samples[row * width + col]; }
  std::uint8_t& at(std::size_t row, std::size_t col) { return samples[row * width + col]; }

  friend bool operator==(const ChannelPlane&, const ChannelPlane&) = default;
};

/// 8-bit raster with 1 (gray) or 3 (RGB) channels. Samples are stored
/// row-major and channel-interleaved (R, G, B, R, G, B, ...), the same
/// layout binary netpbm uses.
class RasterImage {
 public:
  RasterImage() = default;
  /// Zero-filled image. Throws Error(ErrorKind::Domain) on zero dimensions
  /// or a channel count other than 1 or 3.
  RasterImage(std::size_t width, std::size_t height, std::size_t channels);
  RasterImage(std::size_t width, std::size_t height, std::size_t channels,
              std::vector<std::uint8_t> samples);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t channels() const noexcept { return channels_; }
  std::size_t sample_count() const noexcept { return samples_.size(); }

  std::span<const std::uint8_t> samples() const noexcept { return samples_; }
  std::span<std::uint8_t> samples() noexcept { return samples_; }

  std::uint8_t at(std::size_t row, std::size_t col, std::size_t ch = 0) const {
    return samples_[(row * width_ + col) * channels_ + ch];
  }
  std::uint8_t& at(std::size_t row, std::size_t col, std::size_t ch = 0) {
    return samples_[(row * width_ + col) * channels_ + ch];
  }

  ChannelPlane plane(std::size_t ch) const;
  void set_plane(std::size_t ch, const ChannelPlane& plane);

  friend bool operator==(const RasterImage&, const RasterImage&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::size_t channels_ = 0;
  std::vector<std::uint8_t> samples_;
};

}  // namespace fmm
