#pragma once

#include <filesystem>
#include <vector>

#include "neolightning/dsp/dsp_config.hpp"
#include "neolightning/mapping/mapping.hpp"

namespace nl::dsp {

struct TimedParams {
  double time_s = 0.0;
  mapping::SynthParams params;
};

struct OfflineRender {
  double sample_rate = 48000.0;
  std::vector<float> samples;  // interleaved stereo
  DspDiagnostics diagnostics;

  std::size_t frames() const { return samples.size() / 2; }
};

/// Deterministic render. Each timeline entry takes effect at the first block
/// boundary at or after its time. Throws std::invalid_argument if the
/// timeline is not sorted.
OfflineRender render_offline(const std::vector<TimedParams>& timeline, double duration_s,
                             const DspConfig& config = {});

/// render_offline, then write a stereo float WAV. Throws IoError.
OfflineRender render_offline_to_wav(const std::vector<TimedParams>& timeline, double duration_s,
                                    const std::filesystem::path& out, const DspConfig& config = {});

}  // namespace nl::dsp
