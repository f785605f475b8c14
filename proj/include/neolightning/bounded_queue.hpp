#pragma once

#include <cstddef>
#include <deque>
#include <mutex>
#include <vector>

namespace nl {

/// Thread-safe FIFO with a fixed capacity. On overflow the oldest element is
/// discarded so consumers always see the freshest data.
template <typename T>
class BoundedQueue {
 public:
  explicit BoundedQueue(std::size_t capacity) : capacity_(capacity == 0 ? 1 : capacity) {}

  /// Returns true if an older element had to be dropped.
  bool push(T value) {
    std::lock_guard lock(mutex_);
    bool dropped = false;
    if (items_.size() == capacity_) {
      items_.pop_front();
      ++dropped_;
      dropped = true;
    }
    items_.push_back(std::move(value));
    return dropped;
  }

  void drain_into(std::vector<T>& out) {
    std::lock_guard lock(mutex_);
    for (auto& item : items_) out.push_back(std::move(item));
    items_.clear();
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return items_.size();
  }

  std::size_t dropped() const {
    std::lock_guard lock(mutex_);
    return dropped_;
  }

  std::size_t capacity() const { return capacity_; }

 private:
  mutable std::mutex mutex_;
  std::deque<T> items_;
  std::size_t capacity_;
  std::size_t dropped_ = 0;
};

}  // namespace nl
