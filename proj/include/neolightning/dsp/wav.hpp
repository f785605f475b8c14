#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <stdexcept>
#include <vector>

namespace nl::dsp {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// IEEE-float (format tag 3) 32-bit WAV writer. The header is patched with
/// final sizes on close().
class WavWriter {
 public:
  WavWriter(const std::filesystem::path& path, std::uint32_t sample_rate, std::uint16_t channels);
  ~WavWriter();

  WavWriter(const WavWriter&) = delete;
  WavWriter& operator=(const WavWriter&) = delete;

  void write(std::span<const float> interleaved);
  void close();

  std::uint64_t frames_written() const { return frames_; }

 private:
  void write_header();

  std::ofstream out_;
  std::uint32_t sample_rate_;
  std::uint16_t channels_;
  std::uint64_t frames_ = 0;
  bool closed_ = false;
};

struct WavData {
  std::uint32_t sample_rate = 0;
  std::uint16_t channels = 0;
  std::uint16_t format_tag = 0;
  std::uint16_t bits_per_sample = 0;
  std::vector<float> samples;  // interleaved
};

void write_wav(const std::filesystem::path& path, std::span<const float> interleaved,
               std::uint32_t sample_rate, std::uint16_t channels);

/// Reads 32-bit float WAV files. Throws IoError on anything else.
WavData read_wav(const std::filesystem::path& path);

}  // namespace nl::dsp
