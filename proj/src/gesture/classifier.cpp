#include "neolightning/gesture/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nl::gesture {
namespace {

constexpr double kMinPalmLength = 1e-6;

double planar_distance(const proto::Landmark& a, const proto::Landmark& b) {
  return std::hypot(static_cast<double>(a.x) - b.x, static_cast<double>(a.y) - b.y);
}

void require(bool ok, const char* field) {
  if (!ok) throw std::invalid_argument(std::string("gesture.") + field + " out of range");
}

}  // namespace

void GestureConfig::validate() const {
  require(theta_close > 0.0, "theta_close");
  require(theta_open > theta_close, "theta_open");
  require(repeat_ms > 0, "repeat_ms");
  require(move_deadzone >= 0.0, "move_deadzone");
  require(max_step > move_deadzone, "max_step");
  require(swipe_dist > 0.0, "swipe_dist");
  require(swipe_window_ms > 0, "swipe_window_ms");
  require(swipe_refractory_ms >= 0, "swipe_refractory_ms");
}

std::optional<double> compute_aperture(const proto::LandmarkFrame& frame) {
  const auto& wrist = frame.points[proto::kWrist];
  const double palm = planar_distance(wrist, frame.points[proto::kMiddleKnuckle]);
  if (palm < kMinPalmLength) return std::nullopt;
  double sum = 0.0;
  for (const auto tip : proto::kFingertips) sum += planar_distance(frame.points[tip], wrist);
  return sum / static_cast<double>(proto::kFingertips.size()) / palm;
}

Point2 compute_centroid(const proto::LandmarkFrame& frame) {
  double x = frame.points[proto::kWrist].x;
  double y = frame.points[proto::kWrist].y;
  for (const auto k : proto::kKnuckles) {
    x += frame.points[k].x;
    y += frame.points[k].y;
  }
  constexpr double n = 1.0 + proto::kKnuckles.size();
  return {x / n, y / n};
}

void classify_into(HandTrackState& state, const proto::LandmarkFrame& frame, Micros now,
                   const GestureConfig& config, std::vector<GestureEvent>& events) {
  if (frame.side != state.side) throw ContractViolation("frame side does not match hand track");
  if (now < state.prev_time) throw ContractViolation("classifier time went backwards");

  const Point2 centroid = compute_centroid(frame);
  const Side side = state.side;

  // (a) swipe: net displacement across the retained window.
  auto& window = state.swipe_window;
  window.push_back({now, centroid});
  const Micros span = millis(config.swipe_window_ms);
  while (!window.empty() && now - window.front().time > span) window.pop_front();

  if (now >= state.refractory_until && window.size() >= 2) {
    const double dx = centroid.x - window.front().centroid.x;
    const double dy = centroid.y - window.front().centroid.y;
    if (std::abs(dx) >= config.swipe_dist && std::abs(dx) > 2.0 * std::abs(dy)) {
      events.push_back({side, GestureKind::Swipe, 0.0, 0.0, dx, false, now});
      state.refractory_until = now + millis(config.swipe_refractory_ms);
      // The flick is consumed; start a fresh window from here.
      window.clear();
      window.push_back({now, centroid});
    }
  }

  // (b) aperture with hysteresis and hold-to-repeat.
  if (const auto aperture = compute_aperture(frame)) {
    const double a = *aperture;
    const Micros repeat = millis(config.repeat_ms);
    if (state.aperture_state != ApertureState::Open && a >= config.theta_open) {
      state.aperture_state = ApertureState::Open;
      state.repeat_next = now + repeat;
      events.push_back({side, GestureKind::OpenHand, 0.0, 0.0, a, false, now});
    } else if (state.aperture_state != ApertureState::Closed && a <= config.theta_close) {
      state.aperture_state = ApertureState::Closed;
      state.repeat_next = now + repeat;
      events.push_back({side, GestureKind::CloseHand, 0.0, 0.0, a, false, now});
    } else if (now >= state.repeat_next) {
      // Repeats only while the hand is still held past its trigger threshold.
      if (state.aperture_state == ApertureState::Open && a >= config.theta_open) {
        state.repeat_next = now + repeat;
        events.push_back({side, GestureKind::OpenHand, 0.0, 0.0, a, true, now});
      } else if (state.aperture_state == ApertureState::Closed && a <= config.theta_close) {
        state.repeat_next = now + repeat;
        events.push_back({side, GestureKind::CloseHand, 0.0, 0.0, a, true, now});
      }
    }
  }

  // (c) continuous movement, muted while a swipe is refractory.
  if (state.prev_centroid && now >= state.refractory_until) {
    const double raw_dx = centroid.x - state.prev_centroid->x;
    const double raw_dy = centroid.y - state.prev_centroid->y;
    if (std::hypot(raw_dx, raw_dy) >= config.move_deadzone) {
      const double dx = std::clamp(raw_dx, -config.max_step, config.max_step);
      const double dy = std::clamp(raw_dy, -config.max_step, config.max_step);
      events.push_back({side, GestureKind::MoveDelta, dx, dy, std::hypot(dx, dy), false, now});
    }
  }

  state.prev_centroid = centroid;
  state.prev_time = now;
}

ClassifyResult classify(const HandTrackState& state, const proto::LandmarkFrame& frame, Micros now,
                        const GestureConfig& config) {
  ClassifyResult result{{}, state};
  classify_into(result.state, frame, now, config, result.events);
  return result;
}

HandTrackState reset_hand(const HandTrackState& state) {
  HandTrackState next = state;
  next.prev_centroid.reset();
  next.swipe_window.clear();
  next.aperture_state = ApertureState::Neutral;
  next.repeat_next = Micros{0};
  return next;
}

}  // namespace nl::gesture
