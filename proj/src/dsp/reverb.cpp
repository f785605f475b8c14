#include "neolightning/dsp/reverb.hpp"

#include <algorithm>
#include <cmath>

namespace nl::dsp {
namespace {

std::size_t scaled_delay(std::size_t delay_at_48k, double sample_rate) {
  const auto scaled = static_cast<std::size_t>(std::lround(static_cast<double>(delay_at_48k) * sample_rate / 48000.0));
  return std::max<std::size_t>(scaled, 1);
}

}  // namespace

SchroederReverb::SchroederReverb(double sample_rate, double max_feedback)
    : sample_rate_(sample_rate), max_feedback_(max_feedback) {
  for (std::size_t i = 0; i < combs_.size(); ++i) {
    combs_[i].buffer.assign(scaled_delay(kCombDelays48k[i], sample_rate), 0.0);
  }
  for (std::size_t i = 0; i < allpasses_.size(); ++i) {
    allpasses_[i].buffer.assign(scaled_delay(kAllpassDelays48k[i], sample_rate), 0.0);
  }
  set_decay(1.0);
}

std::array<std::size_t, 4> SchroederReverb::comb_delays() const {
  std::array<std::size_t, 4> d{};
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = combs_[i].buffer.size();
  return d;
}

std::array<std::size_t, 2> SchroederReverb::allpass_delays() const {
  return {allpasses_[0].buffer.size(), allpasses_[1].buffer.size()};
}

void SchroederReverb::set_decay(double rt60) {
  if (rt60 == rt60_) return;
  rt60_ = rt60;
  for (std::size_t i = 0; i < combs_.size(); ++i) {
    const double delay_s = static_cast<double>(combs_[i].buffer.size()) / sample_rate_;
    const double g = std::min(std::pow(10.0, -3.0 * delay_s / rt60), max_feedback_);
    feedback_[i] = g;
    // Unit energy gain per comb, so a longer room rings longer, not louder.
    input_gain_[i] = std::sqrt(1.0 - g * g);
  }
}

double SchroederReverb::process(double input) {
  double sum = 0.0;
  for (std::size_t i = 0; i < combs_.size(); ++i) {
    auto& comb = combs_[i];
    const double delayed = comb.read();
    sum += delayed;
    comb.write_advance(input_gain_[i] * input + feedback_[i] * delayed);
  }
  double out = 0.5 * sum;
  for (auto& ap : allpasses_) {
    const double delayed = ap.read();
    const double v = out + kAllpassGain * delayed;
    out = delayed - kAllpassGain * v;
    ap.write_advance(v);
  }
  return out;
}

void SchroederReverb::reset() {
  for (auto& line : combs_) std::fill(line.buffer.begin(), line.buffer.end(), 0.0);
  for (auto& line : allpasses_) std::fill(line.buffer.begin(), line.buffer.end(), 0.0);
}

}  // namespace nl::dsp
