#pragma once

#include <cstdint>

#include "neolightning/gesture/classifier.hpp"
#include "neolightning/types.hpp"

namespace nl::wand {

struct WandConfig {
  double key_step = 0.05;    // per key press
  double depth_step = 0.10;  // per open/close event
  double gesture_gain = 1.0; // centroid delta -> scene units
  double r_min = 0.02;
  double r_max = 0.08;

  void validate() const;
};

/// One sphere. Coordinates live in the unit cube: x 0=left, y 0=bottom,
/// z 0=farthest/1=closest. radius follows z.
struct WandState {
  Side side = Side::Left;
  double x = 0.5;
  double y = 0.5;
  double z = 0.5;
  bool active = false;
  double radius = 0.05;

  friend bool operator==(const WandState&, const WandState&) = default;
};

enum class ActionKind : std::uint8_t { Delta, Toggle };

struct WandAction {
  Side side = Side::Left;
  ActionKind kind = ActionKind::Delta;
  double dx = 0.0;
  double dy = 0.0;
  double dz = 0.0;

  static WandAction delta(Side side, double dx, double dy, double dz) {
    return {side, ActionKind::Delta, dx, dy, dz};
  }
  static WandAction toggle(Side side) { return {side, ActionKind::Toggle, 0.0, 0.0, 0.0}; }

  friend bool operator==(const WandAction&, const WandAction&) = default;
};

struct SceneState {
  WandState left;
  WandState right;
  double overlap = 0.0;

  const WandState& wand(Side side) const { return side == Side::Left ? left : right; }
  WandState& wand(Side side) { return side == Side::Left ? left : right; }

  friend bool operator==(const SceneState&, const SceneState&) = default;
};

double radius_for(double z, const WandConfig& config);

/// Both wands at the cube centre, inactive.
SceneState initial_scene(const WandConfig& config);

WandAction gesture_to_action(const gesture::GestureEvent& event, const WandConfig& config);

/// Delta adds then clamps each axis to [0,1] and refreshes radius; Toggle
/// flips `active`. Overlap is recomputed.
SceneState apply_action(const SceneState& scene, const WandAction& action, const WandConfig& config);

/// Normalized sphere intersection in [0,1]; 0 if either wand is inactive.
double overlap_fraction(const SceneState& scene);

}  // namespace nl::wand
