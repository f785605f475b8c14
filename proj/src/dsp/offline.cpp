#include "neolightning/dsp/offline.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>

#include "neolightning/dsp/synth.hpp"
#include "neolightning/dsp/wav.hpp"

namespace nl::dsp {

OfflineRender render_offline(const std::vector<TimedParams>& timeline, double duration_s,
                             const DspConfig& config) {
  if (!std::is_sorted(timeline.begin(), timeline.end(),
                      [](const TimedParams& a, const TimedParams& b) { return a.time_s < b.time_s; })) {
    throw std::invalid_argument("param timeline is not sorted by time");
  }
  if (!(duration_s >= 0.0)) throw std::invalid_argument("duration must be non-negative");

  OfflineRender result;
  result.sample_rate = config.sample_rate;
  const auto total = static_cast<std::size_t>(std::llround(duration_s * config.sample_rate));
  result.samples.assign(total * 2, 0.0F);

  Synth synth(config);
  std::size_t next = 0;
  for (std::size_t start = 0; start < total; start += config.block_size) {
    const double block_time = static_cast<double>(start) / config.sample_rate;
    bool changed = false;
    while (next < timeline.size() && timeline[next].time_s <= block_time) {
      ++next;
      changed = true;
    }
    if (changed) synth.set_params(timeline[next - 1].params);
    const std::size_t frames = std::min(config.block_size, total - start);
    synth.render(std::span<float>(result.samples).subspan(start * 2, frames * 2));
  }
  result.diagnostics = synth.diagnostics();
  return result;
}

OfflineRender render_offline_to_wav(const std::vector<TimedParams>& timeline, double duration_s,
                                    const std::filesystem::path& out, const DspConfig& config) {
  auto render = render_offline(timeline, duration_s, config);
  write_wav(out, render.samples, static_cast<std::uint32_t>(config.sample_rate), 2);
  return render;
}

}  // namespace nl::dsp
