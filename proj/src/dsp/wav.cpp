#include "neolightning/dsp/wav.hpp"

#include <array>
#include <bit>
#include <cstring>

namespace nl::dsp {
namespace {

constexpr std::uint16_t kFormatIeeeFloat = 3;
constexpr std::uint16_t kBitsPerSample = 32;
// RIFF header + fmt (18-byte body) + fact + data chunk header.
constexpr std::size_t kHeaderSize = 12 + (8 + 18) + (8 + 4) + 8;

void put_u16(std::uint8_t* p, std::uint16_t v) {
  p[0] = static_cast<std::uint8_t>(v);
  p[1] = static_cast<std::uint8_t>(v >> 8);
}

void put_u32(std::uint8_t* p, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) p[i] = static_cast<std::uint8_t>(v >> (8 * i));
}

std::uint16_t get_u16(const std::uint8_t* p) { return static_cast<std::uint16_t>(p[0] | (p[1] << 8)); }

std::uint32_t get_u32(const std::uint8_t* p) {
  return std::uint32_t{p[0]} | (std::uint32_t{p[1]} << 8) | (std::uint32_t{p[2]} << 16) |
         (std::uint32_t{p[3]} << 24);
}

}  // namespace

WavWriter::WavWriter(const std::filesystem::path& path, std::uint32_t sample_rate, std::uint16_t channels)
    : out_(path, std::ios::binary | std::ios::trunc), sample_rate_(sample_rate), channels_(channels) {
  if (!out_) throw IoError("cannot open '" + path.string() + "' for writing");
  write_header();
}

WavWriter::~WavWriter() {
  try {
    close();
  } catch (...) {
  }
}

void WavWriter::write_header() {
  std::array<std::uint8_t, kHeaderSize> h{};
  const std::uint64_t data_bytes = frames_ * channels_ * 4;
  const std::uint16_t block_align = static_cast<std::uint16_t>(channels_ * 4);
  std::uint8_t* p = h.data();
  std::memcpy(p, "RIFF", 4);
  put_u32(p + 4, static_cast<std::uint32_t>(kHeaderSize - 8 + data_bytes));
  std::memcpy(p + 8, "WAVE", 4);
  p += 12;
  std::memcpy(p, "fmt ", 4);
  put_u32(p + 4, 18);
  put_u16(p + 8, kFormatIeeeFloat);
  put_u16(p + 10, channels_);
  put_u32(p + 12, sample_rate_);
  put_u32(p + 16, sample_rate_ * block_align);
  put_u16(p + 20, block_align);
  put_u16(p + 22, kBitsPerSample);
  put_u16(p + 24, 0);
  p += 26;
  std::memcpy(p, "fact", 4);
  put_u32(p + 4, 4);
  put_u32(p + 8, static_cast<std::uint32_t>(frames_));
  p += 12;
  std::memcpy(p, "data", 4);
  put_u32(p + 4, static_cast<std::uint32_t>(data_bytes));
  out_.write(reinterpret_cast<const char*>(h.data()), static_cast<std::streamsize>(h.size()));
}

void WavWriter::write(std::span<const float> interleaved) {
  if (closed_) throw IoError("write to closed WAV file");
  std::array<std::uint8_t, 4096> chunk{};
  std::size_t used = 0;
  for (const float s : interleaved) {
    put_u32(chunk.data() + used, std::bit_cast<std::uint32_t>(s));
    used += 4;
    if (used == chunk.size()) {
      out_.write(reinterpret_cast<const char*>(chunk.data()), static_cast<std::streamsize>(used));
      used = 0;
    }
  }
  out_.write(reinterpret_cast<const char*>(chunk.data()), static_cast<std::streamsize>(used));
  frames_ += interleaved.size() / channels_;
  if (!out_) throw IoError("WAV write failed");
}

void WavWriter::close() {
  if (closed_) return;
  closed_ = true;
  out_.seekp(0);
  write_header();
  out_.close();
  if (out_.fail()) throw IoError("WAV finalize failed");
}

void write_wav(const std::filesystem::path& path, std::span<const float> interleaved,
               std::uint32_t sample_rate, std::uint16_t channels) {
  WavWriter writer(path, sample_rate, channels);
  writer.write(interleaved);
  writer.close();
}

WavData read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw IoError("not a RIFF/WAVE file: " + path.string());
  }
  WavData wav;
  bool have_fmt = false;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::uint8_t* chunk = bytes.data() + pos;
    const std::uint32_t size = get_u32(chunk + 4);
    if (pos + 8 + size > bytes.size()) throw IoError("truncated chunk in " + path.string());
    const std::uint8_t* body = chunk + 8;
    if (std::memcmp(chunk, "fmt ", 4) == 0 && size >= 16) {
      wav.format_tag = get_u16(body);
      wav.channels = get_u16(body + 2);
      wav.sample_rate = get_u32(body + 4);
      wav.bits_per_sample = get_u16(body + 14);
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      if (!have_fmt || wav.format_tag != kFormatIeeeFloat || wav.bits_per_sample != 32) {
        throw IoError("only 32-bit float WAV is supported");
      }
      wav.samples.resize(size / 4);
      for (std::size_t i = 0; i < wav.samples.size(); ++i) {
        wav.samples[i] = std::bit_cast<float>(get_u32(body + 4 * i));
      }
      return wav;
    }
    pos += 8 + size + (size & 1U);
  }
  throw IoError("no data chunk in " + path.string());
}

}  // namespace nl::dsp
