#include "neolightning/mapping/mapping.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nl::mapping {
namespace {

void require(bool ok, const char* field) {
  if (!ok) throw std::invalid_argument(std::string("mapping.") + field + " out of range");
}

double exp_law(double lo, double hi, double t) { return lo * std::pow(hi / lo, t); }

}  // namespace

void MapConfig::validate(double sample_rate) const {
  require(f_min > 0.0 && f_min < f_max, "f_min");
  require(f_max < sample_rate / 2.0, "f_max");
  require(c_min > 0.0 && c_min < c_max, "c_min");
  require(c_max < sample_rate / 6.0, "c_max");
  require(rt_min > 0.0 && rt_min < rt_max, "rt_min");
  require(amp_floor >= 0.0 && amp_floor < 1.0, "amp_floor");
  require(xmod_exponent > 0.0, "xmod_exponent");
}

double map_pitch(double y, const MapConfig& config) { return exp_law(config.f_min, config.f_max, y); }

double map_amp(const wand::WandState& wand, const MapConfig& config) {
  if (!wand.active) return 0.0;
  return config.amp_floor + (1.0 - config.amp_floor) * wand.z;
}

double map_cutoff(double x, const MapConfig& config) { return exp_law(config.c_min, config.c_max, x); }

double map_reverb(double z, const MapConfig& config) {
  return config.rt_min + (1.0 - z) * (config.rt_max - config.rt_min);
}

SynthParams map_scene(const wand::SceneState& scene, const MapConfig& config) {
  SynthParams params;
  for (const auto* wand : {&scene.left, &scene.right}) {
    auto& voice = params.voice(wand->side);
    voice.freq = map_pitch(wand->y, config);
    voice.amp = map_amp(*wand, config);
    voice.cutoff = map_cutoff(wand->x, config);
    voice.rt60 = map_reverb(wand->z, config);
    voice.active = wand->active;
  }
  const double overlap = wand::overlap_fraction(scene);
  params.xmod = config.xmod_exponent == 1.0 ? overlap : std::pow(overlap, config.xmod_exponent);
  return params;
}

}  // namespace nl::mapping
