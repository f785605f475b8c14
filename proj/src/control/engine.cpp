#include "neolightning/control/engine.hpp"

namespace nl::control {

Engine::Engine(EngineConfig config)
    : config_(std::move(config)),
      hands_{gesture::HandTrackState(Side::Left), gesture::HandTrackState(Side::Right)},
      scene_(wand::initial_scene(config_.wand)),
      params_(mapping::map_scene(scene_, config_.mapping)) {
  scratch_.reserve(8);
}

void Engine::handle_frame(const proto::LandmarkFrame& frame, Micros now) {
  auto& hand = hands_[index_of(frame.side)];
  // Ingest clocks and control clocks can disagree by a hair; never let that
  // trip the classifier's monotonic-time contract.
  const Micros t = now < hand.prev_time ? hand.prev_time : now;
  scratch_.clear();
  gesture::classify_into(hand, frame, t, config_.gesture, scratch_);
  for (const auto& event : scratch_) handle_gesture(event);
}

void Engine::handle_hand_lost(Side side) {
  auto& hand = hands_[index_of(side)];
  hand = gesture::reset_hand(hand);
}

void Engine::handle_ingest(const proto::IngestEvent& event, Micros now) {
  if (const auto* frame = std::get_if<proto::LandmarkFrame>(&event)) {
    handle_frame(*frame, now);
  } else {
    handle_hand_lost(std::get<proto::HandLost>(event).side);
  }
}

void Engine::handle_key(Key key) { apply(key_to_action(key, config_.wand)); }

bool Engine::handle_key_code(std::string_view code) {
  const auto key = parse_key(code);
  if (!key) {
    ++diag_.ignored_keys;
    return false;
  }
  handle_key(*key);
  return true;
}

void Engine::handle_gesture(const gesture::GestureEvent& event) {
  apply(wand::gesture_to_action(event, config_.wand));
}

void Engine::apply(const wand::WandAction& action) {
  scene_ = wand::apply_action(scene_, action, config_.wand);
  params_ = mapping::map_scene(scene_, config_.mapping);
  ++revision_;
}

StateSnapshot Engine::snapshot(Micros now) {
  StateSnapshot s;
  s.seq = next_seq_++;
  s.time = now;
  s.scene = scene_;
  s.params = params_;
  s.overlap = scene_.overlap;
  s.diag = diag_;
  return s;
}

}  // namespace nl::control
