#include "neolightning/proto/osc_codec.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <random>

namespace nl::proto {
namespace {

LandmarkFrame zero_frame(Side side = Side::Left) {
  LandmarkFrame f;
  f.side = side;
  f.seq = 0;
  f.confidence = 1.0F;
  return f;
}

// side=R, seq=7, confidence=0.5, points[i] = (i*0.01, 0.5, -0.02)
LandmarkFrame golden_frame() {
  LandmarkFrame f;
  f.side = Side::Right;
  f.seq = 7;
  f.confidence = 0.5F;
  for (std::size_t i = 0; i < kLandmarkCount; ++i) {
    f.points[i] = {static_cast<float>(static_cast<double>(i) * 0.01), 0.5F, static_cast<float>(-0.02)};
  }
  return f;
}

std::vector<std::uint8_t> read_golden() {
  std::ifstream in(std::string(NL_TEST_DATA_DIR) + "/golden_frame_r7.bin", std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

LandmarkFrame random_frame(std::mt19937_64& rng) {
  std::uniform_real_distribution<float> coord(kCoordMin, kCoordMax);
  std::uniform_real_distribution<float> depth(-3.0F, 3.0F);
  std::uniform_real_distribution<float> conf(0.0F, 1.0F);
  LandmarkFrame f;
  f.side = (rng() & 1U) ? Side::Left : Side::Right;
  f.seq = static_cast<std::int64_t>(rng());
  f.confidence = conf(rng);
  for (auto& p : f.points) p = {coord(rng), coord(rng), depth(rng)};
  return f;
}

bool bit_identical(const LandmarkFrame& a, const LandmarkFrame& b) {
  if (a.side != b.side || a.seq != b.seq) return false;
  if (std::bit_cast<std::uint32_t>(a.confidence) != std::bit_cast<std::uint32_t>(b.confidence)) return false;
  return std::memcmp(a.points.data(), b.points.data(), sizeof(a.points)) == 0;
}

const DecodeError& as_error(const DecodeResult& r) { return std::get<DecodeError>(r); }

TEST(OscCodec, AddressAndTypeTagLayout) {
  const auto bytes = encode_frame(zero_frame());
  ASSERT_EQ(bytes.size(), kEncodedFrameSize);
  EXPECT_EQ(std::memcmp(bytes.data(), "/nl/hand\0\0\0\0", 12), 0);
  EXPECT_EQ(std::memcmp(bytes.data() + 12, ",sh", 3), 0);
  for (std::size_t i = 15; i < 15 + 64; ++i) EXPECT_EQ(bytes[i], 'f') << "at " << i;
  EXPECT_EQ(bytes[79], 0);
  EXPECT_EQ(std::memcmp(bytes.data() + 80, "L\0\0\0", 4), 0);
}

TEST(OscCodec, MatchesGoldenBytesFromReferenceEncoder) {
  const auto golden = read_golden();
  ASSERT_EQ(golden.size(), kEncodedFrameSize);
  EXPECT_EQ(encode_frame(golden_frame()), golden);
}

TEST(OscCodec, DecodesGoldenBytes) {
  const auto result = decode_frame(read_golden());
  ASSERT_TRUE(std::holds_alternative<LandmarkFrame>(result));
  EXPECT_TRUE(bit_identical(std::get<LandmarkFrame>(result), golden_frame()));
}

TEST(OscCodec, OtherAddressIsIgnored) {
  // "/other\0\0" ",\0\0\0"
  const std::vector<std::uint8_t> msg{'/', 'o', 't', 'h', 'e', 'r', 0, 0, ',', 0, 0, 0};
  const auto result = decode_frame(msg);
  ASSERT_TRUE(std::holds_alternative<Ignored>(result));
  EXPECT_EQ(std::get<Ignored>(result).address, "/other");
}

TEST(OscCodec, TruncatedDatagramIsMalformed) {
  const auto bytes = encode_frame(zero_frame());
  const auto result = decode_frame(std::span(bytes).first(8));
  ASSERT_TRUE(std::holds_alternative<DecodeError>(result));
  EXPECT_EQ(as_error(result).kind, DecodeError::Kind::MalformedMessage);
}

TEST(OscCodec, TruncatedArgumentsReportOffset) {
  const auto bytes = encode_frame(zero_frame());
  const auto result = decode_frame(std::span(bytes).first(100));
  ASSERT_TRUE(std::holds_alternative<DecodeError>(result));
  EXPECT_EQ(as_error(result).kind, DecodeError::Kind::MalformedMessage);
  EXPECT_EQ(as_error(result).offset, 100U);
}

TEST(OscCodec, ExtraArgumentIsMalformed) {
  auto bytes = encode_frame(zero_frame());
  // Rewrite the type tags to announce one more float and append it.
  std::vector<std::uint8_t> longer(bytes.begin(), bytes.begin() + 12);
  std::string tags = ",sh" + std::string(65, 'f');
  tags.resize(72, '\0');
  longer.insert(longer.end(), tags.begin(), tags.end());
  longer.insert(longer.end(), bytes.begin() + 80, bytes.end());
  longer.insert(longer.end(), {0, 0, 0, 0});
  const auto result = decode_frame(longer);
  ASSERT_TRUE(std::holds_alternative<DecodeError>(result));
  EXPECT_EQ(as_error(result).kind, DecodeError::Kind::MalformedMessage);
  EXPECT_EQ(as_error(result).field, "type_tags");

  // Same tags, trailing bytes after a valid payload.
  bytes.insert(bytes.end(), {0, 0, 0, 0});
  EXPECT_EQ(as_error(decode_frame(bytes)).kind, DecodeError::Kind::MalformedMessage);
}

TEST(OscCodec, NonZeroPaddingIsMalformed) {
  auto bytes = encode_frame(zero_frame());
  bytes[10] = 'x';  // inside the address padding
  EXPECT_EQ(as_error(decode_frame(bytes)).kind, DecodeError::Kind::MalformedMessage);
}

TEST(OscCodec, UnknownSideIsInvalidFrame) {
  auto bytes = encode_frame(zero_frame());
  bytes[80] = 'X';
  const auto& error = as_error(decode_frame(bytes));
  EXPECT_EQ(error.kind, DecodeError::Kind::InvalidFrame);
  EXPECT_EQ(error.field, "side");
  EXPECT_EQ(error.offset, 80U);
}

TEST(OscCodec, OutOfRangeValuesAreInvalidFrames) {
  auto f = zero_frame();
  auto bytes = encode_frame(f);
  // confidence lives at 92..95; 2.0f = 0x40000000
  bytes[92] = 0x40;
  const auto& error = as_error(decode_frame(bytes));
  EXPECT_EQ(error.kind, DecodeError::Kind::InvalidFrame);
  EXPECT_EQ(error.field, "confidence");

  f.points[3].y = 1.75F;
  EXPECT_THROW(encode_frame(f), ValidationError);
  f.points[3].y = 0.0F;
  f.points[20].z = std::numeric_limits<float>::quiet_NaN();
  EXPECT_THROW(encode_frame(f), ValidationError);
}

TEST(OscCodec, EncodeRefusesBadSideAndSmallBuffer) {
  auto f = zero_frame();
  f.side = static_cast<Side>(7);
  EXPECT_THROW(encode_frame(f), ValidationError);
  std::array<std::uint8_t, 16> tiny{};
  EXPECT_THROW(encode_frame(zero_frame(), tiny), ValidationError);
}

TEST(OscCodec, BoundaryCoordinatesAreAccepted) {
  auto f = zero_frame(Side::Right);
  f.points[0] = {kCoordMin, kCoordMax, -1e6F};
  f.confidence = 0.0F;
  const auto result = decode_frame(encode_frame(f));
  ASSERT_TRUE(std::holds_alternative<LandmarkFrame>(result));
  EXPECT_EQ(std::get<LandmarkFrame>(result), f);
}

TEST(OscCodecProperty, RoundTripIsBitExactAndAligned) {
  std::mt19937_64 rng(0x5eed);
  for (int i = 0; i < 2000; ++i) {
    const auto f = random_frame(rng);
    const auto bytes = encode_frame(f);
    ASSERT_EQ(bytes.size() % 4, 0U);
    const auto result = decode_frame(bytes);
    ASSERT_TRUE(std::holds_alternative<LandmarkFrame>(result)) << "iteration " << i;
    ASSERT_TRUE(bit_identical(std::get<LandmarkFrame>(result), f)) << "iteration " << i;
  }
}

TEST(OscCodecProperty, RandomBytesNeverCrash) {
  std::mt19937_64 rng(42);
  const auto valid = encode_frame(golden_frame());
  for (int i = 0; i < 5000; ++i) {
    std::vector<std::uint8_t> junk;
    if (i % 2 == 0) {
      junk.resize(rng() % 400);
      for (auto& b : junk) b = static_cast<std::uint8_t>(rng());
    } else {
      // Mutate a valid message so the parser gets deep before failing.
      junk = valid;
      junk.resize(rng() % (valid.size() + 8));
      for (int k = 0; k < 4 && !junk.empty(); ++k) junk[rng() % junk.size()] = static_cast<std::uint8_t>(rng());
    }
    const auto result = decode_frame(junk);
    if (const auto* error = std::get_if<DecodeError>(&result)) EXPECT_LE(error->offset, junk.size());
  }
}

}  // namespace
}  // namespace nl::proto
