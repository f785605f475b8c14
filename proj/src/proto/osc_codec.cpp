#include "neolightning/proto/osc_codec.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <string_view>

namespace nl::proto {
namespace {

constexpr std::size_t kFloatArgs = 1 + 3 * kLandmarkCount;  // confidence + coords
constexpr std::size_t kTypeTagLength = 3 + kFloatArgs;        // ",sh" + f...

constexpr std::size_t padded(std::size_t n) { return (n + 3) & ~std::size_t{3}; }

constexpr std::array<char, kTypeTagLength> make_type_tags() {
  std::array<char, kTypeTagLength> tags{};
  tags[0] = ',';
  tags[1] = 's';
  tags[2] = 'h';
  for (std::size_t i = 3; i < tags.size(); ++i) tags[i] = 'f';
  return tags;
}

constexpr auto kTypeTags = make_type_tags();
constexpr std::string_view kTypeTagView{kTypeTags.data(), kTypeTags.size()};

class Writer {
 public:
  explicit Writer(std::span<std::uint8_t> out) : out_(out) {}

  void string(std::string_view s) {
    std::memcpy(out_.data() + pos_, s.data(), s.size());
    const std::size_t end = pos_ + padded(s.size() + 1);
    std::fill(out_.begin() + static_cast<std::ptrdiff_t>(pos_ + s.size()),
              out_.begin() + static_cast<std::ptrdiff_t>(end), std::uint8_t{0});
    pos_ = end;
  }

  void u32(std::uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8) out_[pos_++] = static_cast<std::uint8_t>(v >> shift);
  }

  void i64(std::int64_t v) {
    const auto u = static_cast<std::uint64_t>(v);
    u32(static_cast<std::uint32_t>(u >> 32));
    u32(static_cast<std::uint32_t>(u));
  }

  void f32(float v) { u32(std::bit_cast<std::uint32_t>(v)); }

  std::size_t position() const { return pos_; }

 private:
  std::span<std::uint8_t> out_;
  std::size_t pos_ = 0;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}

  std::size_t position() const { return pos_; }
  std::size_t remaining() const { return in_.size() - pos_; }

  // OSC string: null-terminated, zero-padded to a multiple of four.
  std::optional<std::string_view> string() {
    const auto* begin = in_.data() + pos_;
    const auto* nul = static_cast<const std::uint8_t*>(std::memchr(begin, 0, remaining()));
    if (nul == nullptr) return std::nullopt;
    const auto length = static_cast<std::size_t>(nul - begin);
    const std::size_t total = padded(length + 1);
    if (total > remaining()) return std::nullopt;
    for (std::size_t i = length; i < total; ++i) {
      if (begin[i] != 0) return std::nullopt;
    }
    pos_ += total;
    return std::string_view(reinterpret_cast<const char*>(begin), length);
  }

  std::optional<std::uint32_t> u32() {
    if (remaining() < 4) return std::nullopt;
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = (v << 8) | in_[pos_++];
    return v;
  }

  std::optional<std::int64_t> i64() {
    if (remaining() < 8) return std::nullopt;
    const auto hi = *u32();
    const auto lo = *u32();
    return static_cast<std::int64_t>((std::uint64_t{hi} << 32) | lo);
  }

  std::optional<float> f32() {
    auto bits = u32();
    if (!bits) return std::nullopt;
    return std::bit_cast<float>(*bits);
  }

 private:
  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

DecodeError malformed(std::size_t offset, std::string field, std::string message) {
  return DecodeError{DecodeError::Kind::MalformedMessage, offset, std::move(field), std::move(message)};
}

DecodeError invalid(std::size_t offset, std::string field, std::string message) {
  return DecodeError{DecodeError::Kind::InvalidFrame, offset, std::move(field), std::move(message)};
}

}  // namespace

std::size_t encode_frame(const LandmarkFrame& frame, std::span<std::uint8_t> out) {
  if (auto violation = find_violation(frame)) {
    throw ValidationError("cannot encode landmark frame: invalid " + *violation);
  }
  if (out.size() < kEncodedFrameSize) {
    throw ValidationError("output buffer too small for landmark frame");
  }
  Writer w(out);
  w.string(kHandAddress);
  w.string(kTypeTagView);
  w.string(side_code(frame.side));
  w.i64(frame.seq);
  w.f32(frame.confidence);
  for (const auto& p : frame.points) {
    w.f32(p.x);
    w.f32(p.y);
    w.f32(p.z);
  }
  return w.position();
}

std::vector<std::uint8_t> encode_frame(const LandmarkFrame& frame) {
  std::vector<std::uint8_t> out(kEncodedFrameSize);
  out.resize(encode_frame(frame, std::span<std::uint8_t>(out)));
  return out;
}

DecodeResult decode_frame(std::span<const std::uint8_t> datagram) {
  if (datagram.empty()) return malformed(0, "", "empty datagram");
  if (datagram.size() % 4 != 0) {
    return malformed(datagram.size(), "", "datagram length is not a multiple of 4");
  }

  Reader r(datagram);
  const auto address = r.string();
  if (!address) return malformed(r.position(), "address", "unterminated or badly padded address");
  if (*address != kHandAddress) return Ignored{std::string(*address)};

  const std::size_t tags_at = r.position();
  const auto tags = r.string();
  if (!tags) return malformed(tags_at, "type_tags", "unterminated or badly padded type tags");
  if (tags->empty() || tags->front() != ',') {
    return malformed(tags_at, "type_tags", "type tag string must start with ','");
  }
  if (*tags != kTypeTagView) {
    return malformed(tags_at, "type_tags", "unexpected type tags for /nl/hand");
  }

  LandmarkFrame frame;
  const std::size_t side_at = r.position();
  const auto side = r.string();
  if (!side) return malformed(side_at, "side", "unterminated or badly padded side string");
  if (*side == "L") {
    frame.side = Side::Left;
  } else if (*side == "R") {
    frame.side = Side::Right;
  } else {
    return invalid(side_at, "side", "side must be \"L\" or \"R\"");
  }

  const std::size_t seq_at = r.position();
  const auto seq = r.i64();
  if (!seq) return malformed(seq_at, "seq", "truncated int64");
  frame.seq = *seq;

  std::array<float, kFloatArgs> values{};
  for (auto& v : values) {
    const std::size_t at = r.position();
    auto f = r.f32();
    if (!f) return malformed(at, "float", "truncated float32 argument");
    v = *f;
  }
  if (r.remaining() != 0) {
    return malformed(r.position(), "", "trailing bytes after last argument");
  }

  frame.confidence = values[0];
  for (std::size_t i = 0; i < kLandmarkCount; ++i) {
    frame.points[i] = Landmark{values[1 + 3 * i], values[2 + 3 * i], values[3 + 3 * i]};
  }

  if (auto violation = find_violation(frame)) {
    return invalid(side_at, *violation, "landmark frame invariant violated");
  }
  return frame;
}

}  // namespace nl::proto
