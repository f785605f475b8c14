#pragma once

#include <cstddef>

namespace nl::dsp {

struct DspConfig {
  double sample_rate = 48000.0;
  std::size_t block_size = 256;
  double xmod_depth = 0.5;     // m: frequency deviation at full overlap
  bool enable_xmod = true;     // false removes the cross-modulation path entirely
  bool naive_saw = false;      // A/B switch: skip polyBLEP correction
  double filter_q = 0.707;
  double smoothing_ms = 10.0;  // one-pole time constant for amp/freq/cutoff
  double pan = 0.7;            // left voice 70/30, right voice mirrored
  double reverb_mix = 0.3;
  double max_feedback = 0.97;  // hard ceiling on comb feedback
  double fade_ms = 50.0;       // shutdown fade

  void validate() const;
};

struct DspDiagnostics {
  std::size_t nan_resets = 0;
  std::size_t freq_clamps = 0;

  friend bool operator==(const DspDiagnostics&, const DspDiagnostics&) = default;
};

}  // namespace nl::dsp
