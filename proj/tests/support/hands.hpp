#pragma once

// Synthetic hand-landmark construction with analytically known centroid and
// aperture, plus scripted multi-frame traces.

#include <cstdint>
#include <vector>

#include "neolightning/gesture/classifier.hpp"
#include "neolightning/proto/landmark_frame.hpp"

namespace nl::testing {

inline constexpr double kPalmLength = 0.1;

/// A hand whose knuckle centroid sits at (cx, cy) and whose fingertips are
/// all `aperture` palm-lengths from the wrist.
proto::LandmarkFrame make_hand(Side side, std::int64_t seq, double cx, double cy, double aperture,
                               double palm = kPalmLength);

struct TraceStep {
  Micros time{0};
  bool lost = false;  // hand-lost marker instead of a frame
  proto::LandmarkFrame frame;
};

/// Random but reproducible trace mixing holds, drifts, horizontal flicks,
/// open/close ramps, tracking glitches and dropouts.
std::vector<TraceStep> make_trace(std::uint64_t seed, Side side, std::size_t segments = 14);

/// Feeds a trace through the production classifier.
std::vector<gesture::GestureEvent> run_classifier(const std::vector<TraceStep>& trace, Side side,
                                                  const gesture::GestureConfig& config);

/// Straight-line reference of the same rules, written independently of the
/// production classifier (plain arrays, no shared helpers).
std::vector<gesture::GestureEvent> reference_classify(const std::vector<TraceStep>& trace, Side side,
                                                      const gesture::GestureConfig& config);

}  // namespace nl::testing
