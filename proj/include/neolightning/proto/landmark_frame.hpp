#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "neolightning/types.hpp"

namespace nl::proto {

inline constexpr std::size_t kLandmarkCount = 21;

// Hand-landmark topology indices.
inline constexpr std::size_t kWrist = 0;
inline constexpr std::array<std::size_t, 5> kFingertips{4, 8, 12, 16, 20};
inline constexpr std::array<std::size_t, 4> kKnuckles{5, 9, 13, 17};
inline constexpr std::size_t kMiddleKnuckle = 9;

// Points whose x/y fall outside this band are treated as tracking garbage.
inline constexpr float kCoordMin = -0.5F;
inline constexpr float kCoordMax = 1.5F;

struct Landmark {
  float x = 0.0F;
  float y = 0.0F;
  float z = 0.0F;

  friend bool operator==(const Landmark&, const Landmark&) = default;
};

/// One detected hand for one camera frame. x,y are normalized image
/// coordinates with y growing upward; z is the detector's relative depth.
struct LandmarkFrame {
  Side side = Side::Left;
  std::int64_t seq = 0;
  float confidence = 1.0F;
  std::array<Landmark, kLandmarkCount> points{};

  friend bool operator==(const LandmarkFrame&, const LandmarkFrame&) = default;
};

/// Returns a description of the first violated invariant, or nullopt when
/// the frame is well formed.
std::optional<std::string> find_violation(const LandmarkFrame& frame);

}  // namespace nl::proto
