#pragma once

#include <array>

#include "neolightning/types.hpp"
#include "neolightning/wand/wand_model.hpp"

namespace nl::mapping {

struct MapConfig {
  double f_min = 110.0;
  double f_max = 1760.0;
  double c_min = 200.0;
  double c_max = 6000.0;
  double rt_min = 0.3;
  double rt_max = 3.0;
  double amp_floor = 0.1;
  double xmod_exponent = 1.0;

  /// c_max must stay below sample_rate / 6 for filter headroom.
  void validate(double sample_rate) const;
};

struct VoiceParams {
  double freq = 440.0;   // Hz
  double amp = 0.0;      // linear, [0,1]
  double cutoff = 1000.0;// Hz
  double rt60 = 1.0;     // seconds
  bool active = false;

  friend bool operator==(const VoiceParams&, const VoiceParams&) = default;
};

struct SynthParams {
  std::array<VoiceParams, kSideCount> voices{};
  double xmod = 0.0;

  const VoiceParams& voice(Side side) const { return voices[index_of(side)]; }
  VoiceParams& voice(Side side) { return voices[index_of(side)]; }

  friend bool operator==(const SynthParams&, const SynthParams&) = default;
};

// Exponential: equal vertical travel spans equal musical intervals.
double map_pitch(double y, const MapConfig& config = {});
double map_amp(const wand::WandState& wand, const MapConfig& config = {});
double map_cutoff(double x, const MapConfig& config = {});
// Farther (smaller z) means a longer decay.
double map_reverb(double z, const MapConfig& config = {});

SynthParams map_scene(const wand::SceneState& scene, const MapConfig& config = {});

}  // namespace nl::mapping
