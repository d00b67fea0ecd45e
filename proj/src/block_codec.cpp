#include "fmm/block_codec.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "fmm/error.hpp"

namespace fmm {

std::size_t EncodedBlock::bit_count(int field_bits) const noexcept {
  const auto w = static_cast<std::size_t>(field_bits);
  if (repetition) return w + 1;
  return w + 1 + w + delta_bits();
}

EncodedBlock describe_block(const QuantizedBlock& b) {
  const BlockStats stats = block_stats(b);
  EncodedBlock e;
  e.min_index = stats.min_index;
  e.repetition = stats.max_delta == 0;
  if (!e.repetition) {
    e.max_delta = stats.max_delta;
    e.deltas = block_deltas(b);
  }
  return e;
}

std::size_t encode_block(BitWriter& out, const QuantizedBlock& b) {
  const std::size_t start = out.bit_position();
  const int field_bits = b.modulus().field_bits();
  const BlockStats stats = block_stats(b);
  out.write(stats.min_index, field_bits);
  out.write(stats.max_delta == 0 ? 1u : 0u, 1);
  if (stats.max_delta != 0) {
    out.write(stats.max_delta, field_bits);
    const int width = bit_length(stats.max_delta);
    for (std::uint8_t v : b.indices()) out.write(static_cast<std::uint32_t>(v - stats.min_index), width);
  }
  return out.bit_position() - start;
}

EncodedBlock read_block_fields(BitReader& in, std::size_t rows, std::size_t cols, Modulus k) {
  if (rows < 1 || rows > kBlockSize || cols < 1 || cols > kBlockSize) {
    throw Error(ErrorKind::Domain, "block dimensions must be in [1, 8]");
  }
  const int field_bits = k.field_bits();
  const auto max_index = static_cast<std::uint32_t>(k.max_index());

  EncodedBlock e;
  const std::uint32_t min = in.read(field_bits);
  if (min > max_index) {
    throw Error(ErrorKind::Range, "block minimum " + std::to_string(min) + " exceeds index limit " +
                                      std::to_string(max_index));
  }
  e.min_index = static_cast<std::uint8_t>(min);
  e.repetition = in.read(1) == 1;
  if (e.repetition) return e;

  const std::uint32_t max_delta = in.read(field_bits);
  if (max_delta == 0) {
    throw Error(ErrorKind::Range, "non-repeating block declares max_delta 0");
  }
  if (min + max_delta > max_index) {
    throw Error(ErrorKind::Range, "block maximum " + std::to_string(min + max_delta) +
                                      " exceeds index limit " + std::to_string(max_index));
  }
  e.max_delta = static_cast<std::uint8_t>(max_delta);
  const int width = bit_length(max_delta);
  e.deltas.resize(rows * cols);
  for (auto& d : e.deltas) {
    const std::uint32_t v = in.read(width);
    if (v > max_delta) {
      throw Error(ErrorKind::Range, "delta " + std::to_string(v) + " exceeds max_delta " +
                                        std::to_string(max_delta));
    }
    d = static_cast<std::uint8_t>(v);
  }
  const auto [lo, hi] = std::minmax_element(e.deltas.begin(), e.deltas.end());
  if (*lo != 0 || *hi != max_delta) {
    throw Error(ErrorKind::Range, "non-canonical block: deltas must span [0, max_delta]");
  }
  return e;
}

QuantizedBlock decode_block(BitReader& in, std::size_t rows, std::size_t cols, Modulus k) {
  const EncodedBlock e = read_block_fields(in, rows, cols, k);
  std::array<std::uint8_t, kBlockCells> indices{};
  const std::size_t n = rows * cols;
  for (std::size_t i = 0; i < n; ++i) {
    indices[i] = e.repetition ? e.min_index : static_cast<std::uint8_t>(e.min_index + e.deltas[i]);
  }
  return QuantizedBlock(rows, cols, std::span<const std::uint8_t>(indices.data(), n), k);
}

}  // namespace fmm
