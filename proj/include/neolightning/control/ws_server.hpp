#pragma once

#include <cstdint>
#include <functional>
#include <memory>

#include "neolightning/control/broadcast.hpp"
#include "neolightning/proto/udp_listener.hpp"

namespace nl::control {

/// WebSocket endpoint for UI clients. Outbound traffic comes from the
/// BroadcastHub; inbound messages are parsed and handed to `on_message` on
/// the server's own I/O thread.
class WsServer {
 public:
  using MessageHandler = std::function<void(const ClientMessage&)>;

  WsServer(const proto::Endpoint& bind_to, BroadcastHub& hub, MessageHandler on_message);
  ~WsServer();

  WsServer(const WsServer&) = delete;
  WsServer& operator=(const WsServer&) = delete;

  void start();
  void stop();

  std::uint16_t port() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace nl::control
