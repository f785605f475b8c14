#pragma once

#include <cstdint>
#include <string>

#include "neolightning/proto/ingest.hpp"

namespace nl::proto {

struct Endpoint {
  std::string host = "0.0.0.0";
  std::uint16_t port = 0;
};

/// Parses "host:port". Throws std::invalid_argument.
Endpoint parse_endpoint(const std::string& text);

/// Blocking IPv4 UDP socket bound at construction.
class UdpListener final : public DatagramSource {
 public:
  explicit UdpListener(const Endpoint& bind_to);
  ~UdpListener() override;

  UdpListener(const UdpListener&) = delete;
  UdpListener& operator=(const UdpListener&) = delete;

  std::optional<std::size_t> receive(std::span<std::uint8_t> buffer, Micros timeout) override;

  /// Port actually bound (useful when binding port 0).
  std::uint16_t port() const { return port_; }

 private:
  int fd_ = -1;
  std::uint16_t port_ = 0;
};

/// Fire-and-forget sender, used by tests and the loopback tooling.
class UdpSender {
 public:
  explicit UdpSender(const Endpoint& target);
  ~UdpSender();

  UdpSender(const UdpSender&) = delete;
  UdpSender& operator=(const UdpSender&) = delete;

  void send(std::span<const std::uint8_t> datagram);

 private:
  int fd_ = -1;
};

}  // namespace nl::proto
