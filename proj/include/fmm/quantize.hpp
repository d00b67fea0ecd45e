#pragma once

// Modulus quantization: samples snap to the nearest multiple of k, are
// divided down into a compact index space and are grouped into 8x8 tiles.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fmm/raster.hpp"

namespace fmm {

inline constexpr std::size_t kBlockSize = 8;
inline constexpr std::size_t kBlockCells = kBlockSize * kBlockSize;

/// Nearest multiple of k within [0, 255]. For k = 5 this is the remainder
/// map 0->+0, 1->-1, 2->-2, 3->+2, 4->+1. Odd k means no ties. When the
/// nearest multiple would exceed 255 the largest multiple <= 255 is used,
/// so |error| <= k/2 holds except above that top multiple for moduli where
/// 255 mod k > k/2 (13, 29, 33, ...).
std::uint8_t quantize_sample(int v, Modulus k = Modulus{});

ChannelPlane quantize_plane(const ChannelPlane& plane, Modulus k = Modulus{});
RasterImage quantize_image(const RasterImage& image, Modulus k = Modulus{});

/// sample / k for every sample. Throws ErrorKind::Domain if a sample is
/// not a multiple of k.
std::vector<std::uint8_t> to_indices(std::span<const std::uint8_t> quantized, Modulus k = Modulus{});
ChannelPlane to_indices(const ChannelPlane& quantized, Modulus k = Modulus{});

/// index * k for every index. Throws ErrorKind::Domain for an index above
/// k.max_index().
std::vector<std::uint8_t> from_indices(std::span<const std::uint8_t> indices, Modulus k = Modulus{});
ChannelPlane from_indices(const ChannelPlane& indices, Modulus k = Modulus{});

/// Block grid dimensions for a plane: ceil(h/8) x ceil(w/8).
struct BlockGrid {
  std::size_t block_rows = 0;
  std::size_t block_cols = 0;

  std::size_t count() const noexcept { return block_rows * block_cols; }
  /// Height of tiles in block row `br`; 8 except possibly the last row.
  std::size_t tile_rows(std::size_t br, std::size_t plane_height) const noexcept;
  std::size_t tile_cols(std::size_t bc, std::size_t plane_width) const noexcept;
};

BlockGrid block_grid(std::size_t width, std::size_t height) noexcept;

/// One tile of a plane. Edge tiles keep their true size; nothing is padded.
struct BlockTile {
  std::size_t block_row = 0;
  std::size_t block_col = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::array<std::uint8_t, kBlockCells> samples{};  // first rows*cols entries, row-major

  std::span<const std::uint8_t> values() const noexcept { return {samples.data(), rows * cols}; }
  friend bool operator==(const BlockTile&, const BlockTile&) = default;
};

/// Tiles in row-major block order.
std::vector<BlockTile> split_blocks(const ChannelPlane& plane);
/// Inverse of split_blocks. Throws ErrorKind::Domain if the tiles do not
/// exactly cover a width x height plane.
ChannelPlane assemble_blocks(std::span<const BlockTile> tiles, std::size_t width, std::size_t height);

/// Up-to-8x8 tile of indices in [0, k.max_index()].
class QuantizedBlock {
 public:
  QuantizedBlock() = default;
  /// Throws ErrorKind::Domain for bad geometry or an index out of range.
  QuantizedBlock(std::size_t rows, std::size_t cols, std::span<const std::uint8_t> indices,
                 Modulus k = Modulus{});

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return rows_ * cols_; }
  Modulus modulus() const noexcept { return k_; }
  std::span<const std::uint8_t> indices() const noexcept { return {indices_.data(), size()}; }
  std::uint8_t at(std::size_t r, std::size_t c) const { return indices_[r * cols_ + c]; }

  friend bool operator==(const QuantizedBlock& a, const QuantizedBlock& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.k_ == b.k_ &&
           std::equal(a.indices().begin(), a.indices().end(), b.indices().begin());
  }

 private:
  std::size_t rows_ = 1;
  std::size_t cols_ = 1;
  Modulus k_{};
  std::array<std::uint8_t, kBlockCells> indices_{};
};

struct BlockStats {
  std::uint8_t min_index = 0;
  std::uint8_t max_delta = 0;  // max - min
};

/// Throws ErrorKind::Domain on an empty span.
BlockStats block_stats(std::span<const std::uint8_t> indices);
inline BlockStats block_stats(const QuantizedBlock& b) { return block_stats(b.indices()); }

/// indices minus the block minimum, row-major.
std::vector<std::uint8_t> block_deltas(const QuantizedBlock& b);

}  // namespace fmm
