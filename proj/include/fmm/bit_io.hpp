#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fmm {

/// Position of the highest set bit plus one; 0 for 0. bit_length(8) == 4.
constexpr int bit_length(std::uint32_t v) noexcept { return std::bit_width(v); }

/// Appends fixed-width fields MSB-first. The final partial byte is
/// zero-padded on the right.
class BitWriter {
 public:
  /// width in [1, 32]; value must fit. Throws ErrorKind::Domain otherwise.
  void write(std::uint32_t value, int width);

  std::size_t bit_position() const noexcept { return bits_; }
  /// Bytes written so far including the padded tail.
  std::vector<std::uint8_t> bytes() const;
  /// Bits as '0'/'1' characters in stream order; handy for fixtures.
  std::string to_bit_string() const;

 private:
  std::vector<std::uint8_t> buf_;
  std::size_t bits_ = 0;
};

/// Reads fields MSB-first from a borrowed byte span.
class BitReader {
 public:
  explicit BitReader(std::span<const std::uint8_t> data) noexcept : data_(data) {}

  /// Throws ErrorKind::Truncated if fewer than `width` bits remain.
  std::uint32_t read(int width);

  std::size_t bit_position() const noexcept { return pos_; }
  std::size_t bits_remaining() const noexcept { return data_.size() * 8 - pos_; }

 private:
  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

/// Packs a string of '0'/'1' characters into bytes, MSB-first; other
/// characters (spaces, separators) are skipped.
std::vector<std::uint8_t> bits_from_string(std::string_view bits);

}  // namespace fmm
