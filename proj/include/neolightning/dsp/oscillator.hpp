#pragma once

namespace nl::dsp {

/// Two-segment polynomial band-limited step residual for a unit-height
/// falling edge at phase 0.
double poly_blep(double phase, double phase_increment);

/// Sawtooth in [-1,1] rising from -1 to 1 once per period.
class SawOscillator {
 public:
  explicit SawOscillator(bool naive = false) : naive_(naive) {}

  /// Emits the sample at the current phase, then advances by
  /// `phase_increment` (= f/sample_rate) and wraps into [0,1).
  double tick(double phase_increment);

  double phase() const { return phase_; }
  void reset(double phase = 0.0) { phase_ = phase; }

 private:
  double phase_ = 0.0;
  bool naive_ = false;
};

}  // namespace nl::dsp
