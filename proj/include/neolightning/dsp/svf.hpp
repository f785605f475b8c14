#pragma once

namespace nl::dsp {

/// Chamberlin state-variable filter, low-pass tap.
class StateVariableFilter {
 public:
  explicit StateVariableFilter(double q = 0.707) : damping_(1.0 / q) {}

  /// Cutoff is clamped into [50, sample_rate / 6.5].
  double process(double input, double cutoff, double sample_rate);

  static double clamp_cutoff(double cutoff, double sample_rate);

  bool finite() const;
  void reset() { low_ = band_ = 0.0; }

  double low() const { return low_; }
  double band() const { return band_; }

 private:
  double damping_;
  double low_ = 0.0;
  double band_ = 0.0;
};

}  // namespace nl::dsp
