#include "fmm/quantize.hpp"

#include <algorithm>
#include <string>

#include "fmm/error.hpp"

namespace fmm {

std::uint8_t quantize_sample(int v, Modulus k) {
  if (v < 0 || v > 255) {
    throw Error(ErrorKind::Domain, "sample out of 8-bit range: " + std::to_string(v));
  }
  const int step = k.value();
  const int down = v - v % step;
  const int up = down + step;
  if (v - down <= step / 2 || up > 255) return static_cast<std::uint8_t>(down);
  return static_cast<std::uint8_t>(up);
}

namespace {

// One table per call keeps the hot loop free of divisions.
std::array<std::uint8_t, 256> quantize_table(Modulus k) {
  std::array<std::uint8_t, 256> table{};
  for (int v = 0; v < 256; ++v) table[v] = quantize_sample(v, k);
  return table;
}

}  // namespace

ChannelPlane quantize_plane(const ChannelPlane& plane, Modulus k) {
  const auto table = quantize_table(k);
  ChannelPlane out(plane.width, plane.height);
  std::transform(plane.samples.begin(), plane.samples.end(), out.samples.begin(),
                 [&](std::uint8_t v) { return table[v]; });
  return out;
}

RasterImage quantize_image(const RasterImage& image, Modulus k) {
  const auto table = quantize_table(k);
  RasterImage out = image;
  for (auto& v : out.samples()) v = table[v];
  return out;
}

std::vector<std::uint8_t> to_indices(std::span<const std::uint8_t> quantized, Modulus k) {
  const int step = k.value();
  std::vector<std::uint8_t> out(quantized.size());
  for (std::size_t i = 0; i < quantized.size(); ++i) {
    if (quantized[i] % step != 0) {
      throw Error(ErrorKind::Domain, "sample " + std::to_string(quantized[i]) +
                                         " is not a multiple of " + std::to_string(step));
    }
    out[i] = static_cast<std::uint8_t>(quantized[i] / step);
  }
  return out;
}

ChannelPlane to_indices(const ChannelPlane& quantized, Modulus k) {
  return ChannelPlane(quantized.width, quantized.height, to_indices(quantized.samples, k));
}

std::vector<std::uint8_t> from_indices(std::span<const std::uint8_t> indices, Modulus k) {
  const int step = k.value();
  const int max = k.max_index();
  std::vector<std::uint8_t> out(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] > max) {
      throw Error(ErrorKind::Domain, "index " + std::to_string(indices[i]) + " exceeds " +
                                         std::to_string(max));
    }
    out[i] = static_cast<std::uint8_t>(indices[i] * step);
  }
  return out;
}

ChannelPlane from_indices(const ChannelPlane& indices, Modulus k) {
  return ChannelPlane(indices.width, indices.height, from_indices(indices.samples, k));
}

std::size_t BlockGrid::tile_rows(std::size_t br, std::size_t plane_height) const noexcept {
  return std::min(kBlockSize, plane_height - br * kBlockSize);
}

std::size_t BlockGrid::tile_cols(std::size_t bc, std::size_t plane_width) const noexcept {
  return std::min(kBlockSize, plane_width - bc * kBlockSize);
}

BlockGrid block_grid(std::size_t width, std::size_t height) noexcept {
  return {(height + kBlockSize - 1) / kBlockSize, (width + kBlockSize - 1) / kBlockSize};
}

std::vector<BlockTile> split_blocks(const ChannelPlane& plane) {
  const BlockGrid grid = block_grid(plane.width, plane.height);
  std::vector<BlockTile> tiles;
  tiles.reserve(grid.count());
  for (std::size_t br = 0; br < grid.block_rows; ++br) {
    for (std::size_t bc = 0; bc < grid.block_cols; ++bc) {
      BlockTile t;
      t.block_row = br;
      t.block_col = bc;
      t.rows = grid.tile_rows(br, plane.height);
      t.cols = grid.tile_cols(bc, plane.width);
      for (std::size_t r = 0; r < t.rows; ++r) {
        const std::uint8_t* src = &plane.samples[(br * kBlockSize + r) * plane.width + bc * kBlockSize];
        std::copy_n(src, t.cols, t.samples.begin() + static_cast<std::ptrdiff_t>(r * t.cols));
      }
      tiles.push_back(t);
    }
  }
  return tiles;
}

ChannelPlane assemble_blocks(std::span<const BlockTile> tiles, std::size_t width, std::size_t height) {
  const BlockGrid grid = block_grid(width, height);
  if (tiles.size() != grid.count()) {
    throw Error(ErrorKind::Domain, "tile count " + std::to_string(tiles.size()) +
                                       " does not cover the plane");
  }
  ChannelPlane out(width, height);
  for (const BlockTile& t : tiles) {
    if (t.block_row >= grid.block_rows || t.block_col >= grid.block_cols ||
        t.rows != grid.tile_rows(t.block_row, height) || t.cols != grid.tile_cols(t.block_col, width)) {
      throw Error(ErrorKind::Domain, "tile geometry does not match the block grid");
    }
    for (std::size_t r = 0; r < t.rows; ++r) {
      std::uint8_t* dst = &out.samples[(t.block_row * kBlockSize + r) * width + t.block_col * kBlockSize];
      std::copy_n(t.samples.begin() + static_cast<std::ptrdiff_t>(r * t.cols), t.cols, dst);
    }
  }
  return out;
}

QuantizedBlock::QuantizedBlock(std::size_t rows, std::size_t cols,
                               std::span<const std::uint8_t> indices, Modulus k)
    : rows_(rows), cols_(cols), k_(k) {
  if (rows < 1 || rows > kBlockSize || cols < 1 || cols > kBlockSize) {
    throw Error(ErrorKind::Domain, "block dimensions must be in [1, 8]");
  }
  if (indices.size() != rows * cols) {
    throw Error(ErrorKind::Domain, "block index count does not match rows x cols");
  }
  const int max = k.max_index();
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] > max) {
      throw Error(ErrorKind::Domain, "block index " + std::to_string(indices[i]) + " exceeds " +
                                         std::to_string(max));
    }
    indices_[i] = indices[i];
  }
}

BlockStats block_stats(std::span<const std::uint8_t> indices) {
  if (indices.empty()) throw Error(ErrorKind::Domain, "block_stats of an empty block");
  const auto [lo, hi] = std::minmax_element(indices.begin(), indices.end());
  return {*lo, static_cast<std::uint8_t>(*hi - *lo)};
}

std::vector<std::uint8_t> block_deltas(const QuantizedBlock& b) {
  const std::uint8_t min = block_stats(b).min_index;
  std::vector<std::uint8_t> out(b.indices().begin(), b.indices().end());
  for (auto& v : out) v = static_cast<std::uint8_t>(v - min);
  return out;
}

}  // namespace fmm
