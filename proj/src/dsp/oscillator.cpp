#include "neolightning/dsp/oscillator.hpp"

#include <algorithm>
#include <cmath>

namespace nl::dsp {

double poly_blep(double phase, double dt) {
  if (phase < dt) {
    const double t = phase / dt;
    return t + t - t * t - 1.0;
  }
  if (phase > 1.0 - dt) {
    const double t = (phase - 1.0) / dt;
    return t * t + t + t + 1.0;
  }
  return 0.0;
}

double SawOscillator::tick(double dt) {
  double out = 2.0 * phase_ - 1.0;
  if (!naive_) out -= poly_blep(phase_, dt);
  phase_ += dt;
  if (phase_ >= 1.0) phase_ -= std::floor(phase_);
  return std::clamp(out, -1.0, 1.0);
}

}  // namespace nl::dsp
