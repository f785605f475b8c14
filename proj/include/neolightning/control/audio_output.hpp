#pragma once

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <span>
#include <thread>

#include "neolightning/control/engine.hpp"
#include "neolightning/control/exchange_slot.hpp"
#include "neolightning/dsp/synth.hpp"
#include "neolightning/dsp/wav.hpp"

namespace nl::control {

/// Where rendered blocks go. write() is called on the audio thread.
class AudioSink {
 public:
  virtual ~AudioSink() = default;
  virtual void write(std::span<const float> interleaved) = 0;
};

class NullSink final : public AudioSink {
 public:
  void write(std::span<const float>) override {}
};

class WavRecordSink final : public AudioSink {
 public:
  WavRecordSink(const std::filesystem::path& path, double sample_rate)
      : writer_(path, static_cast<std::uint32_t>(sample_rate), 2) {}
  void write(std::span<const float> interleaved) override { writer_.write(interleaved); }

 private:
  dsp::WavWriter writer_;
};

/// Raw little-endian float32 stereo, e.g. piped into `aplay -f FLOAT_LE`.
class RawStreamSink final : public AudioSink {
 public:
  explicit RawStreamSink(std::FILE* stream) : stream_(stream) {}
  void write(std::span<const float> interleaved) override {
    std::fwrite(interleaved.data(), sizeof(float), interleaved.size(), stream_);
  }

 private:
  std::FILE* stream_;
};

/// Real-time audio activity: renders one block per block period against a
/// steady clock, reading parameters from the exchange slot. Never locks.
class AudioThread {
 public:
  AudioThread(const dsp::DspConfig& config, ExchangeSlot<StateSnapshot>& slot, std::unique_ptr<AudioSink> sink);
  ~AudioThread();

  AudioThread(const AudioThread&) = delete;
  AudioThread& operator=(const AudioThread&) = delete;

  void start();
  /// Fades out over the configured fade time, then joins.
  void stop();

  std::uint64_t underruns() const { return underruns_.load(std::memory_order_relaxed); }
  std::uint64_t nan_resets() const { return nan_resets_.load(std::memory_order_relaxed); }
  std::uint64_t blocks() const { return blocks_.load(std::memory_order_relaxed); }

 private:
  void run();

  dsp::Synth synth_;
  ExchangeSlot<StateSnapshot>& slot_;
  std::unique_ptr<AudioSink> sink_;
  std::thread thread_;
  std::atomic<bool> stop_requested_{false};
  std::atomic<std::uint64_t> underruns_{0};
  std::atomic<std::uint64_t> nan_resets_{0};
  std::atomic<std::uint64_t> blocks_{0};
};

}  // namespace nl::control
