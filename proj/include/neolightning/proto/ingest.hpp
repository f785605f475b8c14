#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "neolightning/proto/landmark_frame.hpp"
#include "neolightning/types.hpp"

namespace nl::proto {

struct IngestConfig {
  double min_confidence = 0.5;
  std::int64_t hand_timeout_ms = 500;
  std::size_t queue_capacity = 8;  // per side
};

/// No frame for this side arrived within the hand timeout.
struct HandLost {
  Side side;
  Micros time;

  friend bool operator==(const HandLost&, const HandLost&) = default;
};

using IngestEvent = std::variant<LandmarkFrame, HandLost>;

struct IngestStats {
  std::uint64_t accepted = 0;
  std::uint64_t ignored = 0;
  std::uint64_t malformed = 0;
  std::uint64_t invalid = 0;
  std::uint64_t stale = 0;
  std::uint64_t low_confidence = 0;

  std::uint64_t dropped() const { return malformed + invalid + stale + low_confidence; }
};

/// Decode + ordering stage. Per side it keeps the last accepted sequence
/// number and arrival time; stale, duplicate and low-confidence frames are
/// dropped, never reordered.
class IngestFilter {
 public:
  explicit IngestFilter(IngestConfig config = {});

  std::optional<LandmarkFrame> accept(std::span<const std::uint8_t> datagram, Micros now);

  /// Emits at most one HandLost per side per loss. Sequence tracking for a
  /// lost side is reset so a restarted sender (seq back at 0) is accepted.
  std::vector<HandLost> poll_timeouts(Micros now);

  const IngestStats& stats() const { return stats_; }

 private:
  struct SideTrack {
    std::optional<std::int64_t> last_seq;
    std::optional<Micros> last_arrival;
  };

  IngestConfig config_;
  std::array<SideTrack, kSideCount> tracks_{};
  IngestStats stats_{};
};

class TransportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Anything that yields datagrams: a UDP socket, or a scripted source in tests.
class DatagramSource {
 public:
  virtual ~DatagramSource() = default;

  /// Waits up to `timeout` for one datagram and copies it into `buffer`.
  /// Returns its size, or nullopt on timeout. Throws TransportError.
  virtual std::optional<std::size_t> receive(std::span<std::uint8_t> buffer, Micros timeout) = 0;
};

using Clock = std::function<Micros()>;

/// Pumps a DatagramSource through an IngestFilter until `should_stop` returns
/// true. A TransportError propagates and ends the stream.
void run_ingest(DatagramSource& source, IngestFilter& filter, const Clock& clock,
                const std::function<bool()>& should_stop,
                const std::function<void(const IngestEvent&)>& emit,
                Micros poll_interval = millis(20));

}  // namespace nl::proto
