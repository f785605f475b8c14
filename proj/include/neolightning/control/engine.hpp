#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "neolightning/control/config.hpp"
#include "neolightning/control/keys.hpp"
#include "neolightning/proto/ingest.hpp"

namespace nl::control {

struct Diagnostics {
  std::uint64_t nan_resets = 0;
  std::uint64_t dropped_frames = 0;
  std::uint64_t ignored_keys = 0;
  std::uint64_t underruns = 0;

  friend bool operator==(const Diagnostics&, const Diagnostics&) = default;
};

/// Immutable, internally consistent view of the instrument. params always
/// equals map_scene(scene).
struct StateSnapshot {
  std::uint64_t seq = 0;
  Micros time{0};
  wand::SceneState scene;
  mapping::SynthParams params;
  double overlap = 0.0;
  Diagnostics diag;

  friend bool operator==(const StateSnapshot&, const StateSnapshot&) = default;
};

/// Single-threaded heart of the instrument: hand tracks, scene and mapped
/// synth parameters. Owned by the control activity.
class Engine {
 public:
  explicit Engine(EngineConfig config);

  void handle_frame(const proto::LandmarkFrame& frame, Micros now);
  void handle_hand_lost(Side side);
  void handle_ingest(const proto::IngestEvent& event, Micros now);

  void handle_key(Key key);
  /// Returns false (and counts it) for codes outside the key map.
  bool handle_key_code(std::string_view code);

  void handle_gesture(const gesture::GestureEvent& event);
  void apply(const wand::WandAction& action);

  /// Builds the next snapshot; sequence numbers strictly increase.
  StateSnapshot snapshot(Micros now);

  const wand::SceneState& scene() const { return scene_; }
  const mapping::SynthParams& params() const { return params_; }
  const EngineConfig& config() const { return config_; }
  const gesture::HandTrackState& hand(Side side) const { return hands_[index_of(side)]; }
  Diagnostics& diagnostics() { return diag_; }

  /// Bumped whenever scene/params change.
  std::uint64_t revision() const { return revision_; }

 private:
  EngineConfig config_;
  std::array<gesture::HandTrackState, kSideCount> hands_;
  wand::SceneState scene_;
  mapping::SynthParams params_;
  Diagnostics diag_;
  std::vector<gesture::GestureEvent> scratch_;
  std::uint64_t next_seq_ = 0;
  std::uint64_t revision_ = 0;
};

}  // namespace nl::control
