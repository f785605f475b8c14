#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "neolightning/control/engine.hpp"

namespace nl::control {

/// Serializes one snapshot as a {"type":"state",...} message.
std::string state_message_json(const StateSnapshot& snapshot);

struct KeyMessage {
  std::string code;
};
struct HelloMessage {
  std::string client;
};
struct InvalidMessage {
  std::string reason;
};

using ClientMessage = std::variant<KeyMessage, HelloMessage, InvalidMessage>;

ClientMessage parse_client_message(std::string_view text);

using ClientId = std::uint64_t;

/// Fan-out of state messages to UI clients. Each client gets at most
/// max_rate_hz messages per second (newer states coalesce into one pending
/// slot) and a queue of `queue_capacity` where the oldest is dropped.
/// publish() never blocks on a client.
class BroadcastHub {
 public:
  BroadcastHub(double max_rate_hz = 30.0, std::size_t queue_capacity = 4);

  ClientId add_client();
  void remove_client(ClientId id);

  void publish(const std::string& message, Micros now);
  /// Promotes coalesced messages whose rate slot has opened.
  void flush_due(Micros now);

  /// Removes and returns everything queued for `id`.
  std::vector<std::string> take(ClientId id);

  std::size_t client_count() const;
  std::uint64_t dropped(ClientId id) const;

  /// Called (outside the lock) when a client's queue gains a message.
  void set_notify(std::function<void(ClientId)> notify);

 private:
  struct Client {
    std::deque<std::string> queue;
    std::optional<std::string> pending;
    Micros next_send{0};
    std::uint64_t dropped = 0;
  };

  void enqueue_locked(Client& client, std::string message, Micros now);

  mutable std::mutex mutex_;
  std::map<ClientId, Client> clients_;
  ClientId next_id_ = 1;
  Micros min_interval_;
  std::size_t queue_capacity_;
  std::function<void(ClientId)> notify_;
};

}  // namespace nl::control
