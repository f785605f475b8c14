#include "neolightning/proto/udp_listener.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <charconv>
#include <cstring>
#include <stdexcept>

namespace nl::proto {
namespace {

sockaddr_in to_sockaddr(const Endpoint& endpoint) {
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(endpoint.port);
  const std::string host = endpoint.host == "localhost" ? "127.0.0.1" : endpoint.host;
  if (inet_pton(AF_INET, host.c_str(), &addr.sin_addr) != 1) {
    throw std::invalid_argument("not an IPv4 address: " + endpoint.host);
  }
  return addr;
}

std::string errno_text(const char* what) { return std::string(what) + ": " + std::strerror(errno); }

}  // namespace

Endpoint parse_endpoint(const std::string& text) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size()) {
    throw std::invalid_argument("expected host:port, got '" + text + "'");
  }
  Endpoint endpoint;
  endpoint.host = text.substr(0, colon);
  const auto port_text = text.substr(colon + 1);
  unsigned port = 0;
  const auto [ptr, ec] = std::from_chars(port_text.data(), port_text.data() + port_text.size(), port);
  if (ec != std::errc{} || ptr != port_text.data() + port_text.size() || port > 65535) {
    throw std::invalid_argument("bad port in '" + text + "'");
  }
  endpoint.port = static_cast<std::uint16_t>(port);
  return endpoint;
}

UdpListener::UdpListener(const Endpoint& bind_to) {
  const auto addr = to_sockaddr(bind_to);
  fd_ = ::socket(AF_INET, SOCK_DGRAM, 0);
  if (fd_ < 0) throw TransportError(errno_text("socket"));
  if (::bind(fd_, reinterpret_cast<const sockaddr*>(&addr), sizeof(addr)) != 0) {
    const auto message = errno_text(("bind " + bind_to.host + ":" + std::to_string(bind_to.port)).c_str());
    ::close(fd_);
    throw TransportError(message);
  }
  sockaddr_in bound{};
  socklen_t len = sizeof(bound);
  ::getsockname(fd_, reinterpret_cast<sockaddr*>(&bound), &len);
  port_ = ntohs(bound.sin_port);
}

UdpListener::~UdpListener() {
  if (fd_ >= 0) ::close(fd_);
}

std::optional<std::size_t> UdpListener::receive(std::span<std::uint8_t> buffer, Micros timeout) {
  pollfd pfd{fd_, POLLIN, 0};
  const int ready = ::poll(&pfd, 1, static_cast<int>(timeout.count() / 1000));
  if (ready < 0) {
    if (errno == EINTR) return std::nullopt;
    throw TransportError(errno_text("poll"));
  }
  if (ready == 0) return std::nullopt;
  const auto n = ::recv(fd_, buffer.data(), buffer.size(), 0);
  if (n < 0) {
    if (errno == EINTR || errno == EAGAIN) return std::nullopt;
    throw TransportError(errno_text("recv"));
  }
  return static_cast<std::size_t>(n);
}

UdpSender::UdpSender(const Endpoint& target) {
  const auto addr = to_sockaddr(target);
  fd_ = ::socket(AF_INET, SOCK_DGRAM, 0);
  if (fd_ < 0) throw TransportError(errno_text("socket"));
  if (::connect(fd_, reinterpret_cast<const sockaddr*>(&addr), sizeof(addr)) != 0) {
    const auto message = errno_text("connect");
    ::close(fd_);
    throw TransportError(message);
  }
}

UdpSender::~UdpSender() {
  if (fd_ >= 0) ::close(fd_);
}

void UdpSender::send(std::span<const std::uint8_t> datagram) {
  if (::send(fd_, datagram.data(), datagram.size(), 0) < 0) throw TransportError(errno_text("send"));
}

}  // namespace nl::proto
