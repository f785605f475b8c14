#include "neolightning/wand/wand_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nl::wand {
namespace {

void require(bool ok, const char* field) {
  if (!ok) throw std::invalid_argument(std::string("wand.") + field + " out of range");
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

void WandConfig::validate() const {
  require(key_step > 0.0 && key_step <= 1.0, "key_step");
  require(depth_step > 0.0 && depth_step <= 1.0, "depth_step");
  require(gesture_gain > 0.0, "gesture_gain");
  require(r_min > 0.0, "r_min");
  require(r_max > r_min, "r_max");
}

double radius_for(double z, const WandConfig& config) {
  return config.r_min + z * (config.r_max - config.r_min);
}

SceneState initial_scene(const WandConfig& config) {
  SceneState scene;
  scene.left.side = Side::Left;
  scene.right.side = Side::Right;
  for (auto* w : {&scene.left, &scene.right}) w->radius = radius_for(w->z, config);
  scene.overlap = overlap_fraction(scene);
  return scene;
}

WandAction gesture_to_action(const gesture::GestureEvent& event, const WandConfig& config) {
  using gesture::GestureKind;
  switch (event.kind) {
    case GestureKind::MoveDelta:
      return WandAction::delta(event.side, config.gesture_gain * event.dx,
                               config.gesture_gain * event.dy, 0.0);
    case GestureKind::OpenHand:
      return WandAction::delta(event.side, 0.0, 0.0, +config.depth_step);
    case GestureKind::CloseHand:
      return WandAction::delta(event.side, 0.0, 0.0, -config.depth_step);
    case GestureKind::Swipe:
      return WandAction::toggle(event.side);
  }
  return WandAction::delta(event.side, 0.0, 0.0, 0.0);
}

SceneState apply_action(const SceneState& scene, const WandAction& action, const WandConfig& config) {
  SceneState next = scene;
  auto& wand = next.wand(action.side);
  if (action.kind == ActionKind::Toggle) {
    wand.active = !wand.active;
  } else {
    wand.x = clamp01(wand.x + action.dx);
    wand.y = clamp01(wand.y + action.dy);
    wand.z = clamp01(wand.z + action.dz);
    wand.radius = radius_for(wand.z, config);
  }
  next.overlap = overlap_fraction(next);
  return next;
}

double overlap_fraction(const SceneState& scene) {
  const auto& l = scene.left;
  const auto& r = scene.right;
  if (!l.active || !r.active) return 0.0;
  const double reach = l.radius + r.radius;
  if (reach <= 0.0) return 0.0;
  const double d = std::sqrt((l.x - r.x) * (l.x - r.x) + (l.y - r.y) * (l.y - r.y) +
                             (l.z - r.z) * (l.z - r.z));
  return std::clamp((reach - d) / reach, 0.0, 1.0);
}

}  // namespace nl::wand
