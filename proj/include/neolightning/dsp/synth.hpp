#pragma once

#include <array>
#include <span>

#include "neolightning/dsp/dsp_config.hpp"
#include "neolightning/dsp/oscillator.hpp"
#include "neolightning/dsp/reverb.hpp"
#include "neolightning/dsp/svf.hpp"
#include "neolightning/mapping/mapping.hpp"

namespace nl::dsp {

/// Smoothed per-voice state: oscillator, filter and the current values of
/// each parameter as they glide toward their block targets.
struct VoiceState {
  SawOscillator osc;
  StateVariableFilter filter;
  double freq = 0.0;
  double amp = 0.0;
  double cutoff = 0.0;
  double last_out = 0.0;  // previous post-filter sample, feeds cross-modulation
};

/// Instantaneous frequency of a voice under cross-modulation by the other
/// voice's previous post-filter sample.
double xmod_frequency(double base_freq, double xmod, double depth, double other_sample);

/// Output stage limiter: identity below 0.8, tanh knee above, never
/// leaves (-1,1).
double soft_clip(double x);

/// Two saw voices -> SVF -> smoothed gain -> pan -> shared reverb.
/// No allocation after construction; render() is real-time safe.
class Synth {
 public:
  explicit Synth(DspConfig config = {});

  /// New targets, taken at the next block boundary.
  void set_params(const mapping::SynthParams& params);

  /// Renders interleaved stereo; frames = out.size() / 2.
  void render(std::span<float> out);

  /// Convenience: set_params then render.
  void render_block(const mapping::SynthParams& params, std::span<float> out) {
    set_params(params);
    render(out);
  }

  void begin_fade();
  bool fading() const { return fade_remaining_ >= 0; }
  bool faded_out() const { return fade_remaining_ == 0; }

  const DspConfig& config() const { return config_; }
  const DspDiagnostics& diagnostics() const { return diag_; }
  const VoiceState& voice(std::size_t i) const { return voices_[i]; }
  const SchroederReverb& reverb() const { return reverb_; }

 private:
  double next_fade_gain();

  DspConfig config_;
  mapping::SynthParams target_{};
  std::array<VoiceState, 2> voices_;
  SchroederReverb reverb_;
  DspDiagnostics diag_{};
  double smoothing_coeff_;
  bool primed_ = false;
  long fade_remaining_ = -1;
  long fade_length_ = 1;
};

}  // namespace nl::dsp
