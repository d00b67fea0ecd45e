#include "fmm/netpbm.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "fixtures.hpp"
#include "fmm/error.hpp"

namespace fmm {
namespace {

std::vector<std::uint8_t> bytes(const std::string& header, std::vector<std::uint8_t> payload) {
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

std::string parse_error(const std::vector<std::uint8_t>& data) {
  try {
    read_netpbm(data);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
    return e.what();
  }
  ADD_FAILURE() << "parser accepted malformed input";
  return {};
}

TEST(ReadNetpbm, GrayAndRgb) {
  const RasterImage gray = read_netpbm(bytes("P5 2 2 255\n", {0, 85, 170, 255}));
  EXPECT_EQ(gray, RasterImage(2, 2, 1, {0, 85, 170, 255}));

  const RasterImage red = read_netpbm(bytes("P6\n1 1\n255\n", {255, 0, 0}));
  EXPECT_EQ(red.channels(), 3u);
  EXPECT_EQ(red.at(0, 0, 0), 255);
  EXPECT_EQ(red.at(0, 0, 1), 0);
}

TEST(ReadNetpbm, CommentsAndWhitespace) {
  const RasterImage img = read_netpbm(bytes("P5\n# made by hand\n 3\t# width\n1\r\n255\n", {7, 8, 9}));
  EXPECT_EQ(img, RasterImage(3, 1, 1, {7, 8, 9}));
  // Payload bytes that look like whitespace are not skipped.
  const RasterImage ws = read_netpbm(bytes("P5 2 1 255 ", {' ', '\n'}));
  EXPECT_EQ(ws.samples()[0], ' ');
}

TEST(ReadNetpbm, IgnoresBytesPastPayload) {
  const RasterImage img = read_netpbm(bytes("P5 1 1 255\n", {4, 5, 6}));
  EXPECT_EQ(img, RasterImage(1, 1, 1, {4}));
}

TEST(ReadNetpbm, ErrorsNameTheField) {
  EXPECT_NE(parse_error(bytes("P2 1 1 255\n", {0})).find("magic"), std::string::npos);
  EXPECT_NE(parse_error({}).find("magic"), std::string::npos);
  EXPECT_NE(parse_error(bytes("P5 1 1 65535\n", {0, 0})).find("maxval"), std::string::npos);
  EXPECT_NE(parse_error(bytes("P5 1 1 15\n", {0})).find("maxval"), std::string::npos);
  EXPECT_NE(parse_error(bytes("P5 4 4 255\n", std::vector<std::uint8_t>(8, 0))).find("short payload"),
            std::string::npos);
  EXPECT_NE(parse_error(bytes("P5 x 4 255\n", {})).find("width"), std::string::npos);
  EXPECT_NE(parse_error(bytes("P5 4", {})).find("height"), std::string::npos);
  EXPECT_NE(parse_error(bytes("P5 0 4 255\n", {})).find("width"), std::string::npos);
  EXPECT_NE(parse_error(bytes("P5 1 1 255", {})).find("maxval"), std::string::npos);
  EXPECT_NE(parse_error(bytes("P5 99999999999 1 255\n", {})).find("width"), std::string::npos);
}

TEST(WriteNetpbm, CanonicalBytes) {
  EXPECT_EQ(write_netpbm(RasterImage(1, 1, 1, {0})), bytes("P5\n1 1\n255\n", {0}));
  EXPECT_EQ(write_netpbm(RasterImage(2, 1, 3, {1, 2, 3, 4, 5, 6})), bytes("P6\n2 1\n255\n", {1, 2, 3, 4, 5, 6}));
}

TEST(Netpbm, RoundtripAndCanonicality) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    const RasterImage img = testing::random_image(rng, 24);
    const auto once = write_netpbm(img);
    ASSERT_EQ(read_netpbm(once), img);
    ASSERT_EQ(write_netpbm(read_netpbm(once)), once);
  }
  const auto messy = bytes("P5 # c\n2\n\n2   255\n", {1, 2, 3, 4});
  const auto canonical = write_netpbm(read_netpbm(messy));
  EXPECT_EQ(write_netpbm(read_netpbm(canonical)), canonical);
}

}  // namespace
}  // namespace fmm
