#include "neolightning/dsp/svf.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace nl::dsp {

double StateVariableFilter::clamp_cutoff(double cutoff, double sample_rate) {
  return std::clamp(cutoff, 50.0, sample_rate / 6.5);
}

double StateVariableFilter::process(double input, double cutoff, double sample_rate) {
  const double f = 2.0 * std::sin(std::numbers::pi * clamp_cutoff(cutoff, sample_rate) / sample_rate);
  low_ += f * band_;
  const double high = input - low_ - damping_ * band_;
  band_ += f * high;
  return low_;
}

bool StateVariableFilter::finite() const { return std::isfinite(low_) && std::isfinite(band_); }

}  // namespace nl::dsp
