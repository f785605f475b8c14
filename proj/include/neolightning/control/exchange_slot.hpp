#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <type_traits>

namespace nl::control {

/// Wait-free single-writer / single-reader handoff of the latest value
/// (triple buffer). The reader never blocks the writer and vice versa.
template <typename T>
class ExchangeSlot {
  static_assert(std::is_trivially_copyable_v<T>);

 public:
  ExchangeSlot() = default;
  explicit ExchangeSlot(const T& initial) { buffers_.fill(initial); }

  void publish(const T& value) {
    buffers_[write_] = value;
    const auto prev = middle_.exchange(static_cast<std::uint8_t>(write_ | kFresh), std::memory_order_acq_rel);
    write_ = prev & kIndexMask;
  }

  /// Copies the newest value into `out`; returns false if nothing new was
  /// published since the previous read (out still gets the last value).
  bool read(T& out) {
    bool fresh = false;
    if (middle_.load(std::memory_order_acquire) & kFresh) {
      const auto prev = middle_.exchange(read_, std::memory_order_acq_rel);
      read_ = prev & kIndexMask;
      fresh = true;
    }
    out = buffers_[read_];
    return fresh;
  }

 private:
  static constexpr std::uint8_t kFresh = 0x4;
  static constexpr std::uint8_t kIndexMask = 0x3;

  std::array<T, 3> buffers_{};
  std::atomic<std::uint8_t> middle_{1};
  std::uint8_t write_ = 0;  // writer-owned
  std::uint8_t read_ = 2;   // reader-owned
};

}  // namespace nl::control
