#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <vector>

#include "neolightning/proto/landmark_frame.hpp"
#include "neolightning/types.hpp"

namespace nl::gesture {

struct GestureConfig {
  double theta_open = 1.6;   // aperture at/above which the hand counts as open
  double theta_close = 1.2;  // aperture at/below which it counts as closed
  std::int64_t repeat_ms = 250;
  double move_deadzone = 0.004;  // normalized units per frame
  double max_step = 0.08;
  double swipe_dist = 0.25;
  std::int64_t swipe_window_ms = 300;
  std::int64_t swipe_refractory_ms = 500;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

enum class ApertureState : std::uint8_t { Neutral, Open, Closed };

enum class GestureKind : std::uint8_t { MoveDelta, OpenHand, CloseHand, Swipe };

struct GestureEvent {
  Side side = Side::Left;
  GestureKind kind = GestureKind::MoveDelta;
  double dx = 0.0;  // MoveDelta only
  double dy = 0.0;
  /// Displacement length for MoveDelta, aperture for Open/Close, signed
  /// horizontal displacement for Swipe.
  double magnitude = 0.0;
  /// Open/Close produced by auto-repeat rather than a threshold crossing.
  bool repeat = false;
  Micros time{0};

  friend bool operator==(const GestureEvent&, const GestureEvent&) = default;
};

struct SwipeSample {
  Micros time;
  Point2 centroid;

  friend bool operator==(const SwipeSample&, const SwipeSample&) = default;
};

/// Everything the classifier remembers about one hand between frames.
struct HandTrackState {
  Side side = Side::Left;
  std::optional<Point2> prev_centroid;
  Micros prev_time{0};
  ApertureState aperture_state = ApertureState::Neutral;
  std::deque<SwipeSample> swipe_window;
  Micros refractory_until{0};
  Micros repeat_next{0};

  explicit HandTrackState(Side s = Side::Left) : side(s) {}

  friend bool operator==(const HandTrackState&, const HandTrackState&) = default;
};

class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Mean fingertip-to-wrist distance (x,y only) in units of palm length
/// (wrist to middle knuckle). nullopt when the palm length is below 1e-6,
/// i.e. the hand is degenerate.
std::optional<double> compute_aperture(const proto::LandmarkFrame& frame);

/// Mean of the wrist and the four knuckles; insensitive to finger curl.
Point2 compute_centroid(const proto::LandmarkFrame& frame);

struct ClassifyResult {
  std::vector<GestureEvent> events;
  HandTrackState state;
};

/// Pure two-frame classifier. Events come out ordered Swipe, Open/Close,
/// MoveDelta. Throws ContractViolation on a side mismatch or time going
/// backwards.
ClassifyResult classify(const HandTrackState& state, const proto::LandmarkFrame& frame, Micros now,
                        const GestureConfig& config);

/// In-place variant used on the control path; appends to `events`.
void classify_into(HandTrackState& state, const proto::LandmarkFrame& frame, Micros now,
                   const GestureConfig& config, std::vector<GestureEvent>& events);

/// Applies a hand-lost marker: forget motion history, aperture back to Neutral.
HandTrackState reset_hand(const HandTrackState& state);

}  // namespace nl::gesture
