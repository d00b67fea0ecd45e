#pragma once

// Per-block stream grammar, all fields MSB-first:
//
//   min_index   W bits, W = bit_length(floor(255 / k))   (6 for k = 5)
//   repetition  1 bit, set iff every index equals min_index
//   -- present only when repetition == 0 --
//   max_delta   W bits, max - min (>= 1)
//   deltas      rows * cols values, bit_length(max_delta) bits each, row-major

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fmm/bit_io.hpp"
#include "fmm/quantize.hpp"

namespace fmm {

/// Field-level view of one encoded block.
struct EncodedBlock {
  std::uint8_t min_index = 0;
  bool repetition = true;
  std::uint8_t max_delta = 0;       // 0 when repetition is set
  std::vector<std::uint8_t> deltas;  // empty when repetition is set

  int delta_width() const noexcept { return bit_length(max_delta); }
  /// Encoded size for a modulus whose min/max fields are `field_bits` wide.
  std::size_t bit_count(int field_bits) const noexcept;
  /// Bits spent on deltas alone.
  std::size_t delta_bits() const noexcept { return deltas.size() * static_cast<std::size_t>(delta_width()); }
};

EncodedBlock describe_block(const QuantizedBlock& b);

/// Appends the block to `out`; returns the number of bits written.
std::size_t encode_block(BitWriter& out, const QuantizedBlock& b);

/// Reads one block's fields. Throws ErrorKind::Truncated on a short stream
/// and ErrorKind::Range when min_index + max_delta exceeds the index space,
/// when max_delta is 0 with repetition clear, or when a delta exceeds
/// max_delta or the deltas do not reach both 0 and max_delta.
EncodedBlock read_block_fields(BitReader& in, std::size_t rows, std::size_t cols, Modulus k);

QuantizedBlock decode_block(BitReader& in, std::size_t rows, std::size_t cols, Modulus k = Modulus{});

}  // namespace fmm
