#include "neolightning/control/ws_server.hpp"

#include <deque>
#include <map>
#include <thread>

#include <boost/asio/ip/tcp.hpp>
#include <boost/asio/post.hpp>
#include <boost/asio/strand.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/websocket.hpp>

namespace nl::control {
namespace {

namespace asio = boost::asio;
namespace beast = boost::beast;
namespace websocket = beast::websocket;
using tcp = asio::ip::tcp;

class Session;

// Lives on the I/O thread only.
struct Registry {
  std::map<ClientId, std::weak_ptr<Session>> sessions;
};

class Session : public std::enable_shared_from_this<Session> {
 public:
  Session(tcp::socket socket, BroadcastHub& hub, Registry& registry, const WsServer::MessageHandler& on_message)
      : ws_(std::move(socket)), hub_(hub), registry_(registry), on_message_(on_message) {}

  void run() {
    ws_.set_option(websocket::stream_base::timeout::suggested(beast::role_type::server));
    ws_.async_accept([self = shared_from_this()](beast::error_code ec) { self->on_accept(ec); });
  }

  // Pulls whatever the hub queued for this client, one write in flight at a time.
  void pump() {
    if (closed_ || writing_) return;
    if (outbox_.empty()) {
      for (auto& message : hub_.take(id_)) outbox_.push_back(std::move(message));
    }
    if (outbox_.empty()) return;
    writing_ = true;
    ws_.text(true);
    ws_.async_write(asio::buffer(outbox_.front()),
                    [self = shared_from_this()](beast::error_code ec, std::size_t) { self->on_write(ec); });
  }

  void close() {
    if (closed_) return;
    beast::error_code ignored;
    beast::get_lowest_layer(ws_).socket().close(ignored);
  }

 private:
  void on_accept(beast::error_code ec) {
    if (ec) return;
    id_ = hub_.add_client();
    registry_.sessions[id_] = weak_from_this();
    registered_ = true;
    do_read();
  }

  void do_read() {
    ws_.async_read(buffer_, [self = shared_from_this()](beast::error_code ec, std::size_t) { self->on_read(ec); });
  }

  void on_read(beast::error_code ec) {
    if (ec) return finish();
    const auto text = beast::buffers_to_string(buffer_.data());
    buffer_.consume(buffer_.size());
    if (on_message_) on_message_(parse_client_message(text));
    do_read();
  }

  void on_write(beast::error_code ec) {
    writing_ = false;
    if (ec) return finish();
    outbox_.pop_front();
    pump();
  }

  void finish() {
    if (closed_) return;
    closed_ = true;
    if (registered_) {
      hub_.remove_client(id_);
      registry_.sessions.erase(id_);
    }
    beast::error_code ignored;
    beast::get_lowest_layer(ws_).socket().close(ignored);
  }

  websocket::stream<beast::tcp_stream> ws_;
  BroadcastHub& hub_;
  Registry& registry_;
  const WsServer::MessageHandler& on_message_;
  beast::flat_buffer buffer_;
  std::deque<std::string> outbox_;
  ClientId id_ = 0;
  bool registered_ = false;
  bool writing_ = false;
  bool closed_ = false;
};

}  // namespace

struct WsServer::Impl {
  Impl(const proto::Endpoint& bind_to, BroadcastHub& hub_ref, MessageHandler handler)
      : hub(hub_ref), on_message(std::move(handler)), acceptor(io) {
    const auto address = asio::ip::make_address(bind_to.host == "localhost" ? "127.0.0.1" : bind_to.host);
    const tcp::endpoint endpoint(address, bind_to.port);
    acceptor.open(endpoint.protocol());
    acceptor.set_option(asio::socket_base::reuse_address(true));
    acceptor.bind(endpoint);
    acceptor.listen(asio::socket_base::max_listen_connections);
    bound_port = acceptor.local_endpoint().port();
  }

  void do_accept() {
    acceptor.async_accept(asio::make_strand(io), [this](beast::error_code ec, tcp::socket socket) {
      if (ec) return;
      std::make_shared<Session>(std::move(socket), hub, registry, on_message)->run();
      do_accept();
    });
  }

  BroadcastHub& hub;
  MessageHandler on_message;
  asio::io_context io{1};
  tcp::acceptor acceptor;
  Registry registry;
  std::uint16_t bound_port = 0;
  std::thread thread;
};

WsServer::WsServer(const proto::Endpoint& bind_to, BroadcastHub& hub, MessageHandler on_message) {
  try {
    impl_ = std::make_unique<Impl>(bind_to, hub, std::move(on_message));
  } catch (const boost::system::system_error& e) {
    throw std::runtime_error("cannot listen on " + bind_to.host + ":" + std::to_string(bind_to.port) + ": " +
                             e.code().message());
  }
}

WsServer::~WsServer() { stop(); }

void WsServer::start() {
  if (impl_->thread.joinable()) return;
  impl_->hub.set_notify([impl = impl_.get()](ClientId id) {
    asio::post(impl->io, [impl, id] {
      const auto it = impl->registry.sessions.find(id);
      if (it == impl->registry.sessions.end()) return;
      if (auto session = it->second.lock()) session->pump();
    });
  });
  impl_->do_accept();
  impl_->thread = std::thread([impl = impl_.get()] { impl->io.run(); });
}

void WsServer::stop() {
  if (!impl_) return;
  impl_->hub.set_notify(nullptr);
  if (impl_->thread.joinable()) {
    asio::post(impl_->io, [impl = impl_.get()] {
      beast::error_code ignored;
      impl->acceptor.close(ignored);
      for (auto& [id, weak] : impl->registry.sessions) {
        if (auto session = weak.lock()) session->close();
      }
    });
    impl_->io.stop();
    impl_->thread.join();
  }
}

std::uint16_t WsServer::port() const { return impl_->bound_port; }

}  // namespace nl::control
