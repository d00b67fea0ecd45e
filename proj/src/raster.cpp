#include "fmm/raster.hpp"

#include <bit>
#include <string>
#include <utility>

#include "fmm/error.hpp"

namespace fmm {

Modulus::Modulus(int k) : k_(k) {
  if (!is_valid(k)) {
    throw Error(ErrorKind::Modulus,
                "modulus must be odd and in [3, 127], got " + std::to_string(k));
  }
}

int Modulus::field_bits() const noexcept {
  return std::bit_width(static_cast<unsigned>(max_index()));
}

ChannelPlane::ChannelPlane(std::size_t w, std::size_t h) : width(w), height(h), samples(w * h, 0) {}

ChannelPlane::ChannelPlane(std::size_t w, std::size_t h, std::vector<std::uint8_t> data)
    : width(w), height(h), samples(std::move(data)) {
  if (samples.size() != w * h) {
    throw Error(ErrorKind::Domain, "plane sample count " + std::to_string(samples.size()) +
                                       " does not match " + std::to_string(w) + "x" +
                                       std::to_string(h));
  }
}

namespace {

void check_geometry(std::size_t width, std::size_t height, std::size_t channels) {
  if (width == 0 || height == 0) throw Error(ErrorKind::Domain, "image dimensions must be >= 1");
  if (channels != 1 && channels != 3) {
    throw Error(ErrorKind::Domain, "channel count must be 1 or 3, got " + std::to_string(channels));
  }
}

}  // namespace

RasterImage::RasterImage(std::size_t width, std::size_t height, std::size_t channels)
    : width_(width), height_(height), channels_(channels) {
  check_geometry(width, height, channels);
  samples_.assign(width * height * channels, 0);
}

RasterImage::RasterImage(std::size_t width, std::size_t height, std::size_t channels,
                         std::vector<std::uint8_t> samples)
    : width_(width), height_(height), channels_(channels), samples_(std::move(samples)) {
  check_geometry(width, height, channels);
  if (samples_.size() != width * height * channels) {
    throw Error(ErrorKind::Domain, "image sample count " + std::to_string(samples_.size()) +
                                       " does not match geometry");
  }
}

ChannelPlane RasterImage::plane(std::size_t ch) const {
  if (ch >= channels_) throw Error(ErrorKind::Domain, "channel index out of range");
  ChannelPlane out(width_, height_);
  const std::size_t n = width_ * height_;
  for (std::size_t i = 0; i < n; ++i) out.samples[i] = samples_[i * channels_ + ch];
  return out;
}

void RasterImage::set_plane(std::size_t ch, const ChannelPlane& plane) {
  if (ch >= channels_) throw Error(ErrorKind::Domain, "channel index out of range");
  if (plane.width != width_ || plane.height != height_) {
    throw Error(ErrorKind::Domain, "plane geometry does not match image");
  }
  const std::size_t n = width_ * height_;
  for (std::size_t i = 0; i < n; ++i) samples_[i * channels_ + ch] = plane.samples[i];
}

}  // namespace fmm
