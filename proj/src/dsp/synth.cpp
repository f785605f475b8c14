#include "neolightning/dsp/synth.hpp"

#include <algorithm>
#include <cmath>

namespace nl::dsp {
namespace {

constexpr double kMinOscFreq = 20.0;
constexpr double kSoftClipKnee = 0.8;

double finite_or(double value, double fallback) { return std::isfinite(value) ? value : fallback; }

}  // namespace

double xmod_frequency(double base_freq, double xmod, double depth, double other_sample) {
  return base_freq * (1.0 + xmod * depth * other_sample);
}

double soft_clip(double x) {
  const double mag = std::abs(x);
  if (mag <= kSoftClipKnee) return x;
  const double headroom = 1.0 - kSoftClipKnee;
  const double shaped = kSoftClipKnee + headroom * std::tanh((mag - kSoftClipKnee) / headroom);
  return std::copysign(shaped, x);
}

Synth::Synth(DspConfig config)
    : config_(config),
      voices_{VoiceState{SawOscillator(config.naive_saw), StateVariableFilter(config.filter_q)},
              VoiceState{SawOscillator(config.naive_saw), StateVariableFilter(config.filter_q)}},
      reverb_(config.sample_rate, config.max_feedback),
      smoothing_coeff_(1.0 - std::exp(-1000.0 / (config.smoothing_ms * config.sample_rate))) {}

void Synth::set_params(const mapping::SynthParams& params) {
  const mapping::SynthParams previous = target_;
  target_ = params;
  // A non-finite target would poison the smoothers for good; keep the old one.
  for (std::size_t i = 0; i < target_.voices.size(); ++i) {
    auto& t = target_.voices[i];
    const auto& p = previous.voices[i];
    if (!std::isfinite(t.freq) || !std::isfinite(t.amp) || !std::isfinite(t.cutoff) || !std::isfinite(t.rt60)) {
      t.freq = finite_or(t.freq, p.freq);
      t.amp = finite_or(t.amp, p.amp);
      t.cutoff = finite_or(t.cutoff, p.cutoff);
      t.rt60 = finite_or(t.rt60, p.rt60);
      ++diag_.nan_resets;
    }
  }
  target_.xmod = std::clamp(finite_or(target_.xmod, previous.xmod), 0.0, 1.0);
  if (!primed_) {
    // Pitch and cutoff start on target; only gain fades in.
    for (std::size_t i = 0; i < voices_.size(); ++i) {
      voices_[i].freq = target_.voices[i].freq;
      voices_[i].cutoff = target_.voices[i].cutoff;
    }
    primed_ = true;
  }
  reverb_.set_decay(std::max(target_.voices[0].rt60, target_.voices[1].rt60));
}

void Synth::begin_fade() {
  if (fade_remaining_ >= 0) return;
  fade_length_ = std::max<long>(1, std::lround(config_.fade_ms * config_.sample_rate / 1000.0));
  fade_remaining_ = fade_length_;
}

double Synth::next_fade_gain() {
  if (fade_remaining_ < 0) return 1.0;
  if (fade_remaining_ == 0) return 0.0;
  --fade_remaining_;
  return static_cast<double>(fade_remaining_) / static_cast<double>(fade_length_);
}

void Synth::render(std::span<float> out) {
  if (!primed_) set_params(target_);
  const double fs = config_.sample_rate;
  const double nyquist_guard = fs / 2.0 - 1.0;
  const double a = smoothing_coeff_;
  const double pan = config_.pan;
  const double xmod = target_.xmod;

  const std::size_t frames = out.size() / 2;
  for (std::size_t n = 0; n < frames; ++n) {
    std::array<double, 2> post{};
    std::array<double, 2> gain{};
    for (std::size_t i = 0; i < voices_.size(); ++i) {
      auto& v = voices_[i];
      const auto& t = target_.voices[i];
      v.freq += a * (t.freq - v.freq);
      v.amp += a * (t.amp - v.amp);
      v.cutoff += a * (t.cutoff - v.cutoff);

      double f_inst = v.freq;
      if (config_.enable_xmod) {
        f_inst = xmod_frequency(v.freq, xmod, config_.xmod_depth, voices_[1 - i].last_out);
      }
      if (f_inst < kMinOscFreq || f_inst > nyquist_guard) {
        f_inst = std::clamp(f_inst, kMinOscFreq, nyquist_guard);
        ++diag_.freq_clamps;
      }

      const double saw = v.osc.tick(f_inst / fs);
      double y = v.filter.process(saw, v.cutoff, fs);
      if (!std::isfinite(y) || !v.filter.finite()) {
        v.filter.reset();
        v.osc.reset();
        v.freq = t.freq;
        v.cutoff = t.cutoff;
        v.amp = 0.0;
        v.last_out = 0.0;
        y = 0.0;
        ++diag_.nan_resets;
      }
      post[i] = y;
      gain[i] = v.amp;
    }
    // Both voices read each other's previous sample, so update afterwards.
    voices_[0].last_out = post[0];
    voices_[1].last_out = post[1];

    const double left_voice = gain[0] * post[0];
    const double right_voice = gain[1] * post[1];
    const double dry_l = pan * left_voice + (1.0 - pan) * right_voice;
    const double dry_r = (1.0 - pan) * left_voice + pan * right_voice;
    const double wet = reverb_.process(0.5 * (dry_l + dry_r));
    const double fade = next_fade_gain();

    out[2 * n] = static_cast<float>(fade * soft_clip(dry_l + config_.reverb_mix * wet));
    out[2 * n + 1] = static_cast<float>(fade * soft_clip(dry_r + config_.reverb_mix * wet));
  }
}

}  // namespace nl::dsp
