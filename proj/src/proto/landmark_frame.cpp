#include "neolightning/proto/landmark_frame.hpp"

#include <cmath>
#include <string>

namespace nl::proto {

std::optional<std::string> find_violation(const LandmarkFrame& frame) {
  if (frame.side != Side::Left && frame.side != Side::Right) return "side";
  if (!(frame.confidence >= 0.0F && frame.confidence <= 1.0F)) return "confidence";
  for (std::size_t i = 0; i < frame.points.size(); ++i) {
    const auto& p = frame.points[i];
    if (!(p.x >= kCoordMin && p.x <= kCoordMax) || !(p.y >= kCoordMin && p.y <= kCoordMax) ||
        !std::isfinite(p.z)) {
      return "points[" + std::to_string(i) + "]";
    }
  }
  return std::nullopt;
}

}  // namespace nl::proto
