#include "neolightning/mapping/mapping.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace nl::mapping {
namespace {

const MapConfig kConfig{};

TEST(Mapping, PitchEndpointsAndMidpoint) {
  EXPECT_NEAR(map_pitch(0.0), 110.0, 1e-9);
  EXPECT_NEAR(map_pitch(1.0), 1760.0, 1e-9);
  EXPECT_NEAR(map_pitch(0.5), 440.0, 1e-9);  // 110 * sqrt(16)
}

TEST(Mapping, EqualTravelGivesEqualIntervals) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 0.8);
  std::uniform_real_distribution<double> step(0.0, 0.2);
  for (int i = 0; i < 1000; ++i) {
    const double a = u(rng);
    const double b = u(rng);
    const double d = step(rng);
    const double ratio_a = map_pitch(a + d) / map_pitch(a);
    const double ratio_b = map_pitch(b + d) / map_pitch(b);
    EXPECT_NEAR(ratio_a / ratio_b, 1.0, 1e-9);
  }
  // Four octaves over the full range: 1/4 of travel is one octave.
  EXPECT_NEAR(map_pitch(0.75) / map_pitch(0.5), 2.0, 1e-9);
}

TEST(Mapping, CutoffIsExponential) {
  EXPECT_NEAR(map_cutoff(0.0), 200.0, 1e-9);
  EXPECT_NEAR(map_cutoff(1.0), 6000.0, 1e-9);
  EXPECT_NEAR(map_cutoff(0.5), std::sqrt(200.0 * 6000.0), 1e-9);
}

TEST(Mapping, ReverbDecreasesWithCloseness) {
  EXPECT_NEAR(map_reverb(0.0), 3.0, 1e-12);
  EXPECT_NEAR(map_reverb(1.0), 0.3, 1e-12);
  EXPECT_NEAR(map_reverb(0.5), 1.65, 1e-12);
  for (double z = 0.0; z < 1.0; z += 0.01) EXPECT_GT(map_reverb(z), map_reverb(z + 0.01));
}

TEST(Mapping, AmplitudeRequiresActiveWand) {
  wand::WandState w;
  w.z = 0.7;
  EXPECT_EQ(map_amp(w), 0.0);
  w.active = true;
  EXPECT_NEAR(map_amp(w), 0.1 + 0.9 * 0.7, 1e-12);
  w.z = 0.0;
  EXPECT_NEAR(map_amp(w), 0.1, 1e-12);
}

TEST(Mapping, OutputsStayInRangeAndAreFinite) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    wand::SceneState scene = wand::initial_scene({});
    for (auto* w : {&scene.left, &scene.right}) {
      w->x = u(rng);
      w->y = u(rng);
      w->z = u(rng);
      w->active = u(rng) > 0.3;
      w->radius = wand::radius_for(w->z, {});
    }
    const auto p = map_scene(scene);
    for (const auto& v : p.voices) {
      EXPECT_TRUE(std::isfinite(v.freq) && v.freq >= 110.0 - 1e-9 && v.freq <= 1760.0 + 1e-9);
      EXPECT_TRUE(v.cutoff >= 200.0 - 1e-9 && v.cutoff <= 6000.0 + 1e-9);
      EXPECT_TRUE(v.rt60 >= 0.3 - 1e-12 && v.rt60 <= 3.0 + 1e-12);
      EXPECT_TRUE(v.amp >= 0.0 && v.amp <= 1.0);
    }
    EXPECT_GE(p.xmod, 0.0);
    EXPECT_LE(p.xmod, 1.0);
  }
}

TEST(Mapping, SceneMapsEachVoiceAndOverlap) {
  wand::SceneState scene = wand::initial_scene({});
  scene.left.active = true;
  scene.left.y = 1.0;
  scene.right.active = true;
  scene.overlap = wand::overlap_fraction(scene);
  const auto p = map_scene(scene);
  EXPECT_NEAR(p.voice(Side::Left).freq, 1760.0, 1e-9);
  EXPECT_NEAR(p.voice(Side::Right).freq, 440.0, 1e-9);
  EXPECT_TRUE(p.voice(Side::Left).active);
  EXPECT_DOUBLE_EQ(p.xmod, scene.overlap);

  MapConfig squared;
  squared.xmod_exponent = 2.0;
  EXPECT_NEAR(map_scene(scene, squared).xmod, scene.overlap * scene.overlap, 1e-12);
}

TEST(MapConfig, RejectsCutoffAboveFilterHeadroom) {
  MapConfig config;
  EXPECT_NO_THROW(config.validate(48000.0));
  EXPECT_THROW(config.validate(32000.0), std::invalid_argument);
  config.f_min = 0.0;
  EXPECT_THROW(config.validate(48000.0), std::invalid_argument);
}

}  // namespace
}  // namespace nl::mapping
