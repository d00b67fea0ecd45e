#include "fmm/container.hpp"

#include <algorithm>
#include <string>

#include "fmm/error.hpp"
#include "fmm/quantize.hpp"

namespace fmm {

namespace {

void put_u32(std::uint8_t* out, std::uint32_t v) {
  out[0] = static_cast<std::uint8_t>(v >> 24);
  out[1] = static_cast<std::uint8_t>(v >> 16);
  out[2] = static_cast<std::uint8_t>(v >> 8);
  out[3] = static_cast<std::uint8_t>(v);
}

std::uint32_t get_u32(const std::uint8_t* in) {
  return (std::uint32_t{in[0]} << 24) | (std::uint32_t{in[1]} << 16) | (std::uint32_t{in[2]} << 8) |
         std::uint32_t{in[3]};
}

// Every block costs at least W + 1 bits; reject impossible geometry before
// allocating anything proportional to it.
void require_capacity(std::span<const std::uint8_t> stream, const BlockGrid& grid, Modulus k) {
  const auto min_block_bits = static_cast<std::size_t>(k.field_bits() + 1);
  if (grid.count() > stream.size() * 8 / min_block_bits) {
    throw Error(ErrorKind::Truncated, "channel stream of " + std::to_string(stream.size()) +
                                          " bytes cannot hold " + std::to_string(grid.count()) +
                                          " blocks");
  }
}

// Visits every block of one channel stream in row-major block order, then
// checks that the stream ends exactly at the last block's padded byte.
template <class OnBlock>
void walk_stream(std::span<const std::uint8_t> stream, std::size_t width, std::size_t height,
                 Modulus k, OnBlock&& on_block) {
  const BlockGrid grid = block_grid(width, height);
  require_capacity(stream, grid, k);
  BitReader reader(stream);
  std::size_t index = 0;
  for (std::size_t br = 0; br < grid.block_rows; ++br) {
    for (std::size_t bc = 0; bc < grid.block_cols; ++bc, ++index) {
      on_block(index, br, bc, grid.tile_rows(br, height), grid.tile_cols(bc, width), reader);
    }
  }
  const std::size_t used = reader.bit_position();
  if ((used + 7) / 8 != stream.size()) {
    throw Error(ErrorKind::Corrupt, "channel stream is " + std::to_string(stream.size()) +
                                        " bytes but its blocks end after " + std::to_string(used) +
                                        " bits");
  }
  if (reader.bits_remaining() > 0 && reader.read(static_cast<int>(reader.bits_remaining())) != 0) {
    throw Error(ErrorKind::Corrupt, "nonzero padding after the last block");
  }
}

// Splits a container into its header and per-channel stream views.
struct ContainerView {
  FmmHeader header;
  std::vector<std::span<const std::uint8_t>> streams;
};

ContainerView split_container(std::span<const std::uint8_t> data) {
  ContainerView view;
  view.header = parse_header(data);
  std::size_t pos = kHeaderSize;
  for (std::size_t ch = 0; ch < view.header.channels; ++ch) {
    if (data.size() - pos < kStreamLengthSize) {
      throw Error(ErrorKind::Truncated, "missing length of channel " + std::to_string(ch));
    }
    const std::uint32_t len = get_u32(data.data() + pos);
    pos += kStreamLengthSize;
    if (data.size() - pos < len) {
      throw Error(ErrorKind::Truncated, "channel " + std::to_string(ch) + " declares " +
                                            std::to_string(len) + " bytes, " +
                                            std::to_string(data.size() - pos) + " remain");
    }
    view.streams.push_back(data.subspan(pos, len));
    pos += len;
  }
  if (pos != data.size()) {
    throw Error(ErrorKind::Corrupt, std::to_string(data.size() - pos) +
                                        " trailing bytes after the last channel");
  }
  return view;
}

}  // namespace

std::array<std::uint8_t, kHeaderSize> serialize_header(const FmmHeader& h) {
  std::array<std::uint8_t, kHeaderSize> out{};
  std::copy(kMagic.begin(), kMagic.end(), out.begin());
  out[4] = kFormatVersion;
  out[5] = static_cast<std::uint8_t>(h.modulus.value());
  put_u32(&out[6], h.width);
  put_u32(&out[10], h.height);
  out[14] = h.channels;
  return out;
}

FmmHeader parse_header(std::span<const std::uint8_t> data) {
  if (data.size() < kHeaderSize) {
    throw Error(ErrorKind::Format, "not an FMM container: " + std::to_string(data.size()) +
                                       " bytes is shorter than the header");
  }
  if (!std::equal(kMagic.begin(), kMagic.end(), data.begin())) {
    throw Error(ErrorKind::Format, "not an FMM container: bad magic");
  }
  if (data[4] != kFormatVersion) {
    throw Error(ErrorKind::Format, "unsupported container version " + std::to_string(data[4]));
  }
  if (!Modulus::is_valid(data[5])) {
    throw Error(ErrorKind::Format, "invalid modulus " + std::to_string(data[5]) + " in header");
  }
  FmmHeader h;
  h.modulus = Modulus(data[5]);
  h.width = get_u32(&data[6]);
  h.height = get_u32(&data[10]);
  h.channels = data[14];
  if (h.width == 0 || h.height == 0) throw Error(ErrorKind::Format, "zero image dimension in header");
  if (h.channels != 1 && h.channels != 3) {
    throw Error(ErrorKind::Format, "invalid channel count " + std::to_string(h.channels));
  }
  return h;
}

std::vector<std::uint8_t> encode_plane(const ChannelPlane& plane, Modulus k) {
  const ChannelPlane indices = to_indices(quantize_plane(plane, k), k);
  BitWriter writer;
  for (const BlockTile& tile : split_blocks(indices)) {
    encode_block(writer, QuantizedBlock(tile.rows, tile.cols, tile.values(), k));
  }
  return writer.bytes();
}

ChannelPlane decode_plane(std::span<const std::uint8_t> stream, std::size_t width,
                          std::size_t height, Modulus k) {
  require_capacity(stream, block_grid(width, height), k);
  ChannelPlane out(width, height);
  const int step = k.value();
  walk_stream(stream, width, height, k,
              [&](std::size_t, std::size_t br, std::size_t bc, std::size_t rows, std::size_t cols,
                  BitReader& reader) {
                const QuantizedBlock b = decode_block(reader, rows, cols, k);
                for (std::size_t r = 0; r < rows; ++r) {
                  for (std::size_t c = 0; c < cols; ++c) {
                    out.at(br * kBlockSize + r, bc * kBlockSize + c) =
                        static_cast<std::uint8_t>(b.at(r, c) * step);
                  }
                }
              });
  return out;
}

std::vector<std::uint8_t> compress(const RasterImage& image, Modulus k) {
  if (image.width() == 0 || image.height() == 0) {
    throw Error(ErrorKind::Domain, "cannot compress an empty image");
  }
  if (image.width() > UINT32_MAX || image.height() > UINT32_MAX) {
    throw Error(ErrorKind::Domain, "image dimensions exceed the container's 32-bit fields");
  }
  FmmHeader header;
  header.modulus = k;
  header.width = static_cast<std::uint32_t>(image.width());
  header.height = static_cast<std::uint32_t>(image.height());
  header.channels = static_cast<std::uint8_t>(image.channels());

  const auto head = serialize_header(header);
  std::vector<std::uint8_t> out(head.begin(), head.end());
  for (std::size_t ch = 0; ch < image.channels(); ++ch) {
    const std::vector<std::uint8_t> stream = encode_plane(image.plane(ch), k);
    std::array<std::uint8_t, kStreamLengthSize> len{};
    put_u32(len.data(), static_cast<std::uint32_t>(stream.size()));
    out.insert(out.end(), len.begin(), len.end());
    out.insert(out.end(), stream.begin(), stream.end());
  }
  return out;
}

RasterImage decompress(std::span<const std::uint8_t> data) {
  const ContainerView view = split_container(data);
  const FmmHeader& h = view.header;
  std::vector<ChannelPlane> planes;
  planes.reserve(h.channels);
  for (const auto& stream : view.streams) planes.push_back(decode_plane(stream, h.width, h.height, h.modulus));
  RasterImage image(h.width, h.height, h.channels);
  for (std::size_t ch = 0; ch < planes.size(); ++ch) image.set_plane(ch, planes[ch]);
  return image;
}

ContainerLayout inspect(std::span<const std::uint8_t> data) {
  const ContainerView view = split_container(data);
  ContainerLayout layout;
  layout.header = view.header;
  const Modulus k = view.header.modulus;
  const int field_bits = k.field_bits();
  for (std::size_t ch = 0; ch < view.streams.size(); ++ch) {
    std::size_t bits = 0;
    walk_stream(view.streams[ch], view.header.width, view.header.height, k,
                [&](std::size_t index, std::size_t br, std::size_t bc, std::size_t rows,
                    std::size_t cols, BitReader& reader) {
                  BlockRecord rec;
                  rec.channel = ch;
                  rec.index = index;
                  rec.block_row = br;
                  rec.block_col = bc;
                  rec.rows = rows;
                  rec.cols = cols;
                  rec.fields = read_block_fields(reader, rows, cols, k);
                  rec.bits = rec.fields.bit_count(field_bits);
                  bits += rec.bits;
                  layout.blocks.push_back(std::move(rec));
                });
    layout.channels.push_back({view.streams[ch].size(), bits});
  }
  return layout;
}

}  // namespace fmm
