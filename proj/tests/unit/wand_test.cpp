#include "neolightning/wand/wand_model.hpp"

#include <gtest/gtest.h>

#include <random>

namespace nl::wand {
namespace {

const WandConfig kConfig{};

SceneState active_scene() {
  auto scene = initial_scene(kConfig);
  scene = apply_action(scene, WandAction::toggle(Side::Left), kConfig);
  return apply_action(scene, WandAction::toggle(Side::Right), kConfig);
}

TEST(Wand, InitialScene) {
  const auto scene = initial_scene(kConfig);
  for (const auto* w : {&scene.left, &scene.right}) {
    EXPECT_DOUBLE_EQ(w->x, 0.5);
    EXPECT_DOUBLE_EQ(w->y, 0.5);
    EXPECT_DOUBLE_EQ(w->z, 0.5);
    EXPECT_FALSE(w->active);
    EXPECT_DOUBLE_EQ(w->radius, 0.05);
  }
  EXPECT_EQ(scene.left.side, Side::Left);
  EXPECT_EQ(scene.right.side, Side::Right);
  EXPECT_EQ(scene.overlap, 0.0);
}

TEST(Wand, RadiusFollowsDepth) {
  EXPECT_DOUBLE_EQ(radius_for(0.0, kConfig), 0.02);
  EXPECT_DOUBLE_EQ(radius_for(1.0, kConfig), 0.08);
  auto scene = apply_action(initial_scene(kConfig), WandAction::delta(Side::Left, 0, 0, 0.3), kConfig);
  EXPECT_NEAR(scene.left.radius, 0.02 + 0.8 * 0.06, 1e-12);
}

TEST(Wand, ClampsToUnitCube) {
  auto scene = initial_scene(kConfig);
  scene = apply_action(scene, WandAction::delta(Side::Right, 2.0, -2.0, 0.7), kConfig);
  EXPECT_EQ(scene.right.x, 1.0);
  EXPECT_EQ(scene.right.y, 0.0);
  EXPECT_EQ(scene.right.z, 1.0);
  // Left wand untouched.
  EXPECT_EQ(scene.left, initial_scene(kConfig).left);
}

TEST(Wand, ClampIsIdempotent) {
  auto scene = initial_scene(kConfig);
  scene = apply_action(scene, WandAction::delta(Side::Left, 1.0, 1.0, 1.0), kConfig);
  const auto again = apply_action(scene, WandAction::delta(Side::Left, 1.0, 1.0, 1.0), kConfig);
  EXPECT_EQ(scene, again);
}

TEST(Wand, ToggleIsAnInvolution) {
  const auto scene = initial_scene(kConfig);
  const auto once = apply_action(scene, WandAction::toggle(Side::Left), kConfig);
  EXPECT_TRUE(once.left.active);
  EXPECT_EQ(apply_action(once, WandAction::toggle(Side::Left), kConfig), scene);
}

TEST(Wand, DeltaReversibleAwayFromBounds) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> small(-0.1, 0.1);
  for (int i = 0; i < 1000; ++i) {
    const double dx = small(rng);
    const double dy = small(rng);
    const double dz = small(rng);
    const auto start = initial_scene(kConfig);
    const auto there = apply_action(start, WandAction::delta(Side::Left, dx, dy, dz), kConfig);
    const auto back = apply_action(there, WandAction::delta(Side::Left, -dx, -dy, -dz), kConfig);
    EXPECT_NEAR(back.left.x, start.left.x, 1e-12);
    EXPECT_NEAR(back.left.y, start.left.y, 1e-12);
    EXPECT_NEAR(back.left.z, start.left.z, 1e-12);
  }
}

TEST(Wand, TenKeyStepsReachTheTopExactly) {
  auto scene = initial_scene(kConfig);
  for (int i = 0; i < 10; ++i) scene = apply_action(scene, WandAction::delta(Side::Left, 0, kConfig.key_step, 0), kConfig);
  EXPECT_EQ(scene.left.y, 1.0);
}

TEST(Overlap, ZeroWhenEitherInactive) {
  auto scene = initial_scene(kConfig);
  EXPECT_EQ(overlap_fraction(scene), 0.0);
  scene = apply_action(scene, WandAction::toggle(Side::Left), kConfig);
  EXPECT_EQ(overlap_fraction(scene), 0.0);
}

TEST(Overlap, CoincidentSpheresOverlapFully) { EXPECT_DOUBLE_EQ(active_scene().overlap, 1.0); }

TEST(Overlap, TouchingSpheresOverlapZero) {
  auto scene = active_scene();
  // Both radii 0.05 at z=0.5; centres 0.1 apart just touch.
  scene = apply_action(scene, WandAction::delta(Side::Left, -0.05, 0, 0), kConfig);
  scene = apply_action(scene, WandAction::delta(Side::Right, 0.05, 0, 0), kConfig);
  EXPECT_NEAR(scene.overlap, 0.0, 1e-12);
  scene = apply_action(scene, WandAction::delta(Side::Right, -0.05, 0, 0), kConfig);
  EXPECT_NEAR(scene.overlap, 0.5, 1e-12);
}

TEST(Overlap, SymmetricAndBounded) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    SceneState scene = active_scene();
    for (auto* w : {&scene.left, &scene.right}) {
      w->x = u(rng);
      w->y = u(rng);
      w->z = u(rng);
      w->radius = radius_for(w->z, kConfig);
    }
    SceneState swapped = scene;
    std::swap(swapped.left, swapped.right);
    const double o = overlap_fraction(scene);
    EXPECT_GE(o, 0.0);
    EXPECT_LE(o, 1.0);
    EXPECT_DOUBLE_EQ(o, overlap_fraction(swapped));
  }
}

TEST(GestureToAction, Table) {
  using gesture::GestureEvent;
  using gesture::GestureKind;
  const GestureEvent move{Side::Left, GestureKind::MoveDelta, 0.03, -0.02, 0.0, false, Micros{0}};
  EXPECT_EQ(gesture_to_action(move, kConfig), WandAction::delta(Side::Left, 0.03, -0.02, 0.0));
  const GestureEvent open{Side::Right, GestureKind::OpenHand, 0, 0, 1.8, false, Micros{0}};
  EXPECT_EQ(gesture_to_action(open, kConfig), WandAction::delta(Side::Right, 0, 0, 0.10));
  const GestureEvent close{Side::Right, GestureKind::CloseHand, 0, 0, 1.0, true, Micros{0}};
  EXPECT_EQ(gesture_to_action(close, kConfig), WandAction::delta(Side::Right, 0, 0, -0.10));
  const GestureEvent swipe{Side::Left, GestureKind::Swipe, 0, 0, -0.3, false, Micros{0}};
  EXPECT_EQ(gesture_to_action(swipe, kConfig), WandAction::toggle(Side::Left));
}

TEST(WandConfig, Validate) {
  WandConfig config;
  config.r_max = 0.01;
  EXPECT_THROW(config.validate(), std::invalid_argument);
}

}  // namespace
}  // namespace nl::wand
