#include "neolightning/proto/ingest.hpp"

#include <array>

#include "neolightning/proto/osc_codec.hpp"

namespace nl::proto {

IngestFilter::IngestFilter(IngestConfig config) : config_(config) {}

std::optional<LandmarkFrame> IngestFilter::accept(std::span<const std::uint8_t> datagram, Micros now) {
  auto result = decode_frame(datagram);
  if (std::holds_alternative<Ignored>(result)) {
    ++stats_.ignored;
    return std::nullopt;
  }
  if (const auto* error = std::get_if<DecodeError>(&result)) {
    if (error->kind == DecodeError::Kind::MalformedMessage) {
      ++stats_.malformed;
    } else {
      ++stats_.invalid;
    }
    return std::nullopt;
  }

  auto& frame = std::get<LandmarkFrame>(result);
  if (frame.confidence < config_.min_confidence) {
    ++stats_.low_confidence;
    return std::nullopt;
  }
  auto& track = tracks_[index_of(frame.side)];
  if (track.last_seq && frame.seq <= *track.last_seq) {
    ++stats_.stale;
    return std::nullopt;
  }
  track.last_seq = frame.seq;
  track.last_arrival = now;
  ++stats_.accepted;
  return frame;
}

std::vector<HandLost> IngestFilter::poll_timeouts(Micros now) {
  std::vector<HandLost> lost;
  const Micros timeout = millis(config_.hand_timeout_ms);
  for (std::size_t i = 0; i < kSideCount; ++i) {
    auto& track = tracks_[i];
    if (track.last_arrival && now - *track.last_arrival >= timeout) {
      lost.push_back(HandLost{static_cast<Side>(i), now});
      track = SideTrack{};
    }
  }
  return lost;
}

void run_ingest(DatagramSource& source, IngestFilter& filter, const Clock& clock,
                const std::function<bool()>& should_stop,
                const std::function<void(const IngestEvent&)>& emit, Micros poll_interval) {
  // One OSC datagram never exceeds a UDP payload.
  std::array<std::uint8_t, 65536> buffer{};
  while (!should_stop()) {
    const auto size = source.receive(buffer, poll_interval);
    const Micros now = clock();
    if (size) {
      if (auto frame = filter.accept(std::span<const std::uint8_t>(buffer.data(), *size), now)) {
        emit(*frame);
      }
    }
    for (const auto& marker : filter.poll_timeouts(now)) emit(marker);
  }
}

}  // namespace nl::proto
