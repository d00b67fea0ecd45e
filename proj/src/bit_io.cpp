#include "fmm/bit_io.hpp"

#include <string>

#include "fmm/error.hpp"

namespace fmm {

void BitWriter::write(std::uint32_t value, int width) {
  if (width < 1 || width > 32) {
    throw Error(ErrorKind::Domain, "bit width must be in [1, 32], got " + std::to_string(width));
  }
  if (width < 32 && (value >> width) != 0) {
    throw Error(ErrorKind::Domain,
                std::to_string(value) + " does not fit in " + std::to_string(width) + " bits");
  }
  for (int i = width - 1; i >= 0; --i) {
    const std::size_t bit_in_byte = bits_ & 7u;
    if (bit_in_byte == 0) buf_.push_back(0);
    if ((value >> i) & 1u) buf_.back() |= static_cast<std::uint8_t>(0x80u >> bit_in_byte);
    ++bits_;
  }
}

std::vector<std::uint8_t> BitWriter::bytes() const { return buf_; }

std::string BitWriter::to_bit_string() const {
  std::string out;
  out.reserve(bits_);
  for (std::size_t i = 0; i < bits_; ++i) {
    out.push_back((buf_[i >> 3] >> (7 - (i & 7u))) & 1u ? '1' : '0');
  }
  return out;
}

std::uint32_t BitReader::read(int width) {
  if (width < 1 || width > 32) {
    throw Error(ErrorKind::Domain, "bit width must be in [1, 32], got " + std::to_string(width));
  }
  if (bits_remaining() < static_cast<std::size_t>(width)) {
    throw Error(ErrorKind::Truncated, "bit stream ended at bit " + std::to_string(pos_) +
                                          " while reading " + std::to_string(width) + " bits");
  }
  std::uint32_t value = 0;
  for (int i = 0; i < width; ++i, ++pos_) {
    value = (value << 1) | ((data_[pos_ >> 3] >> (7 - (pos_ & 7u))) & 1u);
  }
  return value;
}

std::vector<std::uint8_t> bits_from_string(std::string_view bits) {
  BitWriter w;
  for (char c : bits) {
    if (c == '0' || c == '1') w.write(c == '1' ? 1u : 0u, 1);
  }
  return w.bytes();
}

}  // namespace fmm
