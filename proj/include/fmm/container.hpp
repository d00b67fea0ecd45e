#pragma once

// .fmm container, all multi-byte integers big-endian:
//
//   offset  size  field
//   0       4     magic "FMM1"
//   4       1     version (1)
//   5       1     modulus (odd, 3..127)
//   6       4     width
//   10      4     height
//   14      1     channels (1 or 3)
//   15      ...   per channel: u32 byte length, then the channel's block
//                 stream (row-major block order, zero-padded to a byte)

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fmm/block_codec.hpp"
#include "fmm/raster.hpp"

namespace fmm {

inline constexpr std::array<std::uint8_t, 4> kMagic = {'F', 'M', 'M', '1'};
inline constexpr std::uint8_t kFormatVersion = 1;
inline constexpr std::size_t kHeaderSize = 15;
inline constexpr std::size_t kStreamLengthSize = 4;

struct FmmHeader {
  Modulus modulus{};
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::uint8_t channels = 1;

  friend bool operator==(const FmmHeader&, const FmmHeader&) = default;
};

std::array<std::uint8_t, kHeaderSize> serialize_header(const FmmHeader& h);
/// Throws ErrorKind::Format for a short buffer, bad magic/version or an
/// invalid field.
FmmHeader parse_header(std::span<const std::uint8_t> data);

/// Encodes one channel plane (raw samples, not yet quantized) into its
/// byte-aligned block stream.
std::vector<std::uint8_t> encode_plane(const ChannelPlane& plane, Modulus k);
/// Inverse of encode_plane; returns quantized samples. The stream must hold
/// exactly the blocks the geometry implies with zero padding, else
/// ErrorKind::Corrupt (or Truncated / Range from the block decoder).
ChannelPlane decode_plane(std::span<const std::uint8_t> stream, std::size_t width,
                          std::size_t height, Modulus k);

/// Deterministic: identical (image, k) always yields identical bytes.
std::vector<std::uint8_t> compress(const RasterImage& image, Modulus k = Modulus{});
/// Returns the quantized image. Throws fmm::Error on any malformed input.
RasterImage decompress(std::span<const std::uint8_t> data);

/// Per-block record for stream inspection.
struct BlockRecord {
  std::size_t channel = 0;
  std::size_t index = 0;
  std::size_t block_row = 0;
  std::size_t block_col = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  EncodedBlock fields;
  std::size_t bits = 0;
};

struct ChannelSummary {
  std::size_t stream_bytes = 0;
  std::size_t stream_bits = 0;  // before padding
};

struct ContainerLayout {
  FmmHeader header;
  std::vector<ChannelSummary> channels;
  std::vector<BlockRecord> blocks;  // channel-major, then row-major block order
};

/// Walks every block of a container with the same validation as decompress.
ContainerLayout inspect(std::span<const std::uint8_t> data);

}  // namespace fmm
