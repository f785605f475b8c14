#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace nl::dsp {

/// Schroeder reverberator: four parallel feedback combs into two serial
/// all-passes, mono in / mono out. Decay is set by RT60.
class SchroederReverb {
 public:
  static constexpr std::array<std::size_t, 4> kCombDelays48k{1557, 1617, 1491, 1422};
  static constexpr std::array<std::size_t, 2> kAllpassDelays48k{225, 556};
  static constexpr double kAllpassGain = 0.5;

  explicit SchroederReverb(double sample_rate = 48000.0, double max_feedback = 0.97);

  /// g_i = 10^(-3 * D_i / rt60) with D_i the comb delay in seconds, capped at
  /// max_feedback.
  void set_decay(double rt60);

  double process(double input);
  void reset();

  double rt60() const { return rt60_; }
  const std::array<double, 4>& feedback() const { return feedback_; }
  std::array<std::size_t, 4> comb_delays() const;
  std::array<std::size_t, 2> allpass_delays() const;

 private:
  struct Line {
    std::vector<double> buffer;
    std::size_t pos = 0;

    double read() const { return buffer[pos]; }
    void write_advance(double v) {
      buffer[pos] = v;
      if (++pos == buffer.size()) pos = 0;
    }
  };

  double sample_rate_;
  double max_feedback_;
  double rt60_ = 0.0;
  std::array<Line, 4> combs_;
  std::array<Line, 2> allpasses_;
  std::array<double, 4> feedback_{};
  std::array<double, 4> input_gain_{};
};

}  // namespace nl::dsp
