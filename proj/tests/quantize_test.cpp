#include "fmm/quantize.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "fmm/error.hpp"

namespace fmm {
namespace {

using testing::kSampleBlock;
using testing::kSampleBlockDeltas;
using testing::kSampleBlockIndices;
using testing::kSampleBlockQuantized;

TEST(Modulus, RejectsEvenAndOutOfRange) {
  for (int k : {-5, 0, 1, 2, 4, 6, 128, 129, 255}) {
    try {
      Modulus m(k);
      FAIL() << "accepted modulus " << k;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Modulus);
    }
  }
  EXPECT_EQ(Modulus(3).max_index(), 85);
  EXPECT_EQ(Modulus(5).max_index(), 51);
  EXPECT_EQ(Modulus(5).field_bits(), 6);
  EXPECT_EQ(Modulus(3).field_bits(), 7);
  EXPECT_EQ(Modulus(127).field_bits(), 2);
}

TEST(QuantizeSample, WorkedValues) {
  EXPECT_EQ(quantize_sample(221), 220);
  EXPECT_EQ(quantize_sample(3), 5);
  EXPECT_EQ(quantize_sample(17), 15);
  EXPECT_EQ(quantize_sample(0), 0);
  EXPECT_EQ(quantize_sample(255), 255);
  EXPECT_EQ(quantize_sample(254), 255);
}

TEST(QuantizeSample, RemainderMapForFive) {
  const int shift[5] = {0, -1, -2, +2, +1};
  for (int v = 0; v <= 255; ++v) {
    EXPECT_EQ(quantize_sample(v), v + shift[v % 5]) << v;
  }
}

TEST(QuantizeSample, LookupColumnsForFive) {
  // Old -> new for 0..15 and 100..115.
  const int low[16] = {0, 0, 0, 5, 5, 5, 5, 5, 10, 10, 10, 10, 10, 15, 15, 15};
  for (int v = 0; v < 16; ++v) {
    EXPECT_EQ(quantize_sample(v), low[v]);
    EXPECT_EQ(quantize_sample(100 + v), 100 + low[v]);
  }
}

TEST(QuantizeSample, MatchesNearestMultipleOracleForEveryOddModulus) {
  for (int k = Modulus::kMin; k <= Modulus::kMax; k += 2) {
    const Modulus m(k);
    for (int v = 0; v <= 255; ++v) {
      const int q = quantize_sample(v, m);
      ASSERT_EQ(q, testing::nearest_multiple_oracle(v, k)) << "k=" << k << " v=" << v;
      ASSERT_EQ(q % k, 0);
      ASSERT_EQ(quantize_sample(q, m), q) << "not idempotent";
    }
  }
}

TEST(QuantizeSample, ErrorBoundedByHalfModulusBelowTopMultiple) {
  for (int k = Modulus::kMin; k <= Modulus::kMax; k += 2) {
    const int top = (255 / k) * k;
    for (int v = 0; v <= top; ++v) {
      ASSERT_LE(std::abs(quantize_sample(v, Modulus(k)) - v), k / 2) << "k=" << k << " v=" << v;
    }
  }
  // Above the top multiple only moduli with 255 mod k <= k/2 keep the bound.
  EXPECT_EQ(quantize_sample(255, Modulus(13)), 247);
  EXPECT_EQ(quantize_sample(255, Modulus(7)), 252);
}

TEST(QuantizeSample, RejectsOutOfRangeSample) {
  EXPECT_THROW(quantize_sample(-1), Error);
  EXPECT_THROW(quantize_sample(256), Error);
}

TEST(QuantizePlane, SampleBlockMatchesPrintedTableExceptMisprint) {
  const ChannelPlane q = quantize_plane(testing::as_plane(kSampleBlock));
  int matches = 0;
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      if (q.at(r, c) == kSampleBlockQuantized[r][c]) ++matches;
    }
  }
  EXPECT_EQ(matches, 63);
  EXPECT_EQ(kSampleBlock[testing::kMisprintRow][testing::kMisprintCol], 241);
  EXPECT_EQ(q.at(testing::kMisprintRow, testing::kMisprintCol), 240);
}

TEST(QuantizePlane, ZerosAndIdempotence) {
  const ChannelPlane zeros(5, 3);
  EXPECT_EQ(quantize_plane(zeros), zeros);

  std::mt19937 rng(7);
  const ChannelPlane p = testing::random_image(rng, 23, 17, 1).plane(0);
  const ChannelPlane once = quantize_plane(p);
  EXPECT_EQ(quantize_plane(once), once);
  EXPECT_EQ(once.width, 23u);
  EXPECT_EQ(once.height, 17u);
}

TEST(Indices, PrintedQuantizedBlockDividesToPrintedIndices) {
  const ChannelPlane idx = to_indices(testing::as_plane(kSampleBlockQuantized));
  EXPECT_EQ(idx, testing::as_plane(kSampleBlockIndices));
  EXPECT_EQ(from_indices(idx), testing::as_plane(kSampleBlockQuantized));
}

TEST(Indices, Endpoints) {
  const std::vector<std::uint8_t> q = {0, 255, 220};
  EXPECT_EQ(to_indices(q), (std::vector<std::uint8_t>{0, 51, 44}));
  const std::vector<std::uint8_t> i = {44, 0, 51};
  EXPECT_EQ(from_indices(i), (std::vector<std::uint8_t>{220, 0, 255}));
}

TEST(Indices, DomainErrors) {
  const std::vector<std::uint8_t> unquantized = {12};
  EXPECT_THROW(to_indices(unquantized), Error);
  const std::vector<std::uint8_t> too_big = {52};
  try {
    from_indices(too_big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Domain);
  }
}

TEST(Indices, InverseOnWholeIndexSpace) {
  for (int k = Modulus::kMin; k <= Modulus::kMax; k += 2) {
    const Modulus m(k);
    std::vector<std::uint8_t> all;
    for (int i = 0; i <= m.max_index(); ++i) all.push_back(static_cast<std::uint8_t>(i));
    ASSERT_EQ(to_indices(from_indices(all, m), m), all);
  }
}

TEST(SplitBlocks, TileShapes) {
  auto shapes = [](std::size_t w, std::size_t h) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const BlockTile& t : split_blocks(ChannelPlane(w, h))) out.emplace_back(t.rows, t.cols);
    return out;
  };
  using Shapes = std::vector<std::pair<std::size_t, std::size_t>>;
  EXPECT_EQ(shapes(16, 16), (Shapes{{8, 8}, {8, 8}, {8, 8}, {8, 8}}));
  EXPECT_EQ(shapes(10, 10), (Shapes{{8, 8}, {8, 2}, {2, 8}, {2, 2}}));
  EXPECT_EQ(shapes(1, 1), (Shapes{{1, 1}}));

  const ChannelPlane block = testing::as_plane(kSampleBlock);
  const auto tiles = split_blocks(block);
  ASSERT_EQ(tiles.size(), 1u);
  EXPECT_TRUE(std::equal(tiles[0].values().begin(), tiles[0].values().end(), block.samples.begin()));
}

// Coverage oracle: every pixel lands in exactly one tile, at the position
// implied by the tile's block coordinates.
TEST(SplitBlocks, PartitionsPlaneAndReassembles) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const ChannelPlane p = testing::random_image(rng, 40).plane(0);
    const auto tiles = split_blocks(p);
    std::vector<int> hits(p.samples.size(), 0);
    for (const BlockTile& t : tiles) {
      for (std::size_t r = 0; r < t.rows; ++r) {
        for (std::size_t c = 0; c < t.cols; ++c) {
          const std::size_t y = t.block_row * 8 + r;
          const std::size_t x = t.block_col * 8 + c;
          ASSERT_LT(y, p.height);
          ASSERT_LT(x, p.width);
          ++hits[y * p.width + x];
          ASSERT_EQ(t.samples[r * t.cols + c], p.at(y, x));
        }
      }
    }
    for (int h : hits) ASSERT_EQ(h, 1);
    ASSERT_EQ(assemble_blocks(tiles, p.width, p.height), p);
  }
}

TEST(BlockStats, WorkedBlocks) {
  const auto idx = testing::flatten(kSampleBlockIndices);
  const QuantizedBlock b(8, 8, idx);
  const BlockStats s = block_stats(b);
  EXPECT_EQ(s.min_index, 42);
  EXPECT_EQ(s.max_delta, 8);
  EXPECT_EQ(block_deltas(b), testing::flatten(kSampleBlockDeltas));

  const std::vector<std::uint8_t> elevens(64, 11);
  const BlockStats u = block_stats(QuantizedBlock(8, 8, elevens));
  EXPECT_EQ(u.min_index, 11);
  EXPECT_EQ(u.max_delta, 0);

  const std::vector<std::uint8_t> single = {7};
  const BlockStats one = block_stats(QuantizedBlock(1, 1, single));
  EXPECT_EQ(one.min_index, 7);
  EXPECT_EQ(one.max_delta, 0);
}

TEST(QuantizedBlock, RejectsBadGeometryAndRange) {
  const std::vector<std::uint8_t> four(4, 1);
  EXPECT_THROW(QuantizedBlock(3, 1, four), Error);
  EXPECT_THROW(QuantizedBlock(0, 4, std::vector<std::uint8_t>{}), Error);
  EXPECT_THROW(QuantizedBlock(1, 9, std::vector<std::uint8_t>(9, 0)), Error);
  EXPECT_THROW(QuantizedBlock(1, 1, std::vector<std::uint8_t>{52}), Error);
  EXPECT_NO_THROW(QuantizedBlock(1, 1, std::vector<std::uint8_t>{85}, Modulus(3)));
  EXPECT_THROW(block_stats(std::span<const std::uint8_t>{}), Error);
}

}  // namespace
}  // namespace fmm
