#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "neolightning/proto/landmark_frame.hpp"

namespace nl::proto {

inline constexpr std::string_view kHandAddress = "/nl/hand";

// Wire layout of one "/nl/hand" message (OSC 1.0, big-endian, 4-byte aligned):
//   "/nl/hand\0" padded to 12 bytes
//   ",sh" + 64 x 'f' + "\0" (68 bytes, already aligned)
//   side string "L\0\0\0" or "R\0\0\0"
//   int64 seq, float32 confidence, 63 x float32 (x0,y0,z0 ... z20)
inline constexpr std::size_t kEncodedFrameSize = 12 + 68 + 4 + 8 + 4 + 63 * 4;
static_assert(kEncodedFrameSize == 348);

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Encodes into `out`, which must hold at least kEncodedFrameSize bytes.
/// Returns the number of bytes written. Throws ValidationError when the frame
/// breaks its invariants or `out` is too small.
std::size_t encode_frame(const LandmarkFrame& frame, std::span<std::uint8_t> out);

std::vector<std::uint8_t> encode_frame(const LandmarkFrame& frame);

/// Datagram was well-formed OSC addressed somewhere else.
struct Ignored {
  std::string address;
};

struct DecodeError {
  enum class Kind { MalformedMessage, InvalidFrame };
  Kind kind;
  std::size_t offset = 0;  // byte offset where parsing stopped
  std::string field;       // offending field, empty for framing errors
  std::string message;
};

using DecodeResult = std::variant<LandmarkFrame, Ignored, DecodeError>;

/// Never reads outside `datagram` and never throws for any input.
DecodeResult decode_frame(std::span<const std::uint8_t> datagram);

}  // namespace nl::proto
