#include "neolightning/control/audio_output.hpp"

#include <chrono>
#include <vector>

namespace nl::control {
namespace {

// Blocks an output device would hold queued; falling further behind than
// this is an audible dropout.
constexpr int kDeviceBufferBlocks = 3;

}  // namespace

AudioThread::AudioThread(const dsp::DspConfig& config, ExchangeSlot<StateSnapshot>& slot,
                         std::unique_ptr<AudioSink> sink)
    : synth_(config), slot_(slot), sink_(std::move(sink)) {}

AudioThread::~AudioThread() { stop(); }

void AudioThread::start() {
  if (thread_.joinable()) return;
  stop_requested_ = false;
  thread_ = std::thread([this] { run(); });
}

void AudioThread::stop() {
  stop_requested_ = true;
  if (thread_.joinable()) thread_.join();
}

void AudioThread::run() {
  using clock = std::chrono::steady_clock;
  const auto& cfg = synth_.config();
  std::vector<float> block(cfg.block_size * 2);
  const auto period = std::chrono::duration_cast<clock::duration>(
      std::chrono::duration<double>(static_cast<double>(cfg.block_size) / cfg.sample_rate));

  StateSnapshot snapshot;
  slot_.read(snapshot);
  synth_.set_params(snapshot.params);

  auto deadline = clock::now();
  while (true) {
    if (slot_.read(snapshot)) synth_.set_params(snapshot.params);
    if (stop_requested_.load(std::memory_order_relaxed)) synth_.begin_fade();

    synth_.render(block);
    sink_->write(block);
    blocks_.fetch_add(1, std::memory_order_relaxed);
    nan_resets_.store(synth_.diagnostics().nan_resets, std::memory_order_relaxed);
    if (synth_.faded_out()) break;

    deadline += period;
    const auto now = clock::now();
    if (now > deadline + kDeviceBufferBlocks * period) {
      // The device queue would have run dry: count it and resynchronize.
      underruns_.fetch_add(1, std::memory_order_relaxed);
      deadline = now;
    } else {
      std::this_thread::sleep_until(deadline);
    }
  }
}

}  // namespace nl::control
