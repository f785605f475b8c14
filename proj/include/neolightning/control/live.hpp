#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include "neolightning/bounded_queue.hpp"
#include "neolightning/control/audio_output.hpp"
#include "neolightning/control/broadcast.hpp"
#include "neolightning/control/engine.hpp"
#include "neolightning/control/ws_server.hpp"
#include "neolightning/proto/udp_listener.hpp"

namespace nl::control {

enum class AudioMode : std::uint8_t { None, Null, Record, RawStdout };

struct LiveOptions {
  AudioMode audio = AudioMode::Null;
  std::string record_path;
  bool serve_ui = true;
  bool terminal_keys = false;  // read keys from stdin in keys mode
};

/// The running instrument: ingest, control and audio activities plus the UI
/// broadcast endpoint.
class LiveEngine {
 public:
  LiveEngine(EngineConfig config, LiveOptions options);
  ~LiveEngine();

  LiveEngine(const LiveEngine&) = delete;
  LiveEngine& operator=(const LiveEngine&) = delete;

  /// Binds sockets and starts all activities. Throws on startup failure.
  void start();
  /// Fades audio, closes sockets, joins threads. Idempotent.
  void stop();

  std::uint16_t udp_port() const;
  std::uint16_t ws_port() const;

  StateSnapshot latest_snapshot() const;
  /// Queue a key as if typed locally.
  void post_key(const std::string& code);

  std::uint64_t audio_underruns() const;

 private:
  void control_loop();
  Micros now() const;

  EngineConfig config_;
  LiveOptions options_;
  Engine engine_;
  BroadcastHub hub_;
  ExchangeSlot<StateSnapshot> audio_slot_;
  std::array<std::unique_ptr<BoundedQueue<proto::IngestEvent>>, kSideCount> ingest_queues_;
  BoundedQueue<ClientMessage> inbound_{64};

  std::unique_ptr<proto::UdpListener> listener_;
  std::unique_ptr<WsServer> ws_;
  std::unique_ptr<AudioThread> audio_;
  std::thread ingest_thread_;
  std::thread control_thread_;
  std::atomic<bool> stopping_{false};
  std::atomic<std::uint64_t> ingest_dropped_{0};
  bool running_ = false;

  std::chrono::steady_clock::time_point epoch_;
  mutable std::mutex latest_mutex_;
  StateSnapshot latest_;
};

/// `run` subcommand: starts the engine and blocks until SIGINT/SIGTERM.
int run_live(const EngineConfig& config, const LiveOptions& options);

}  // namespace nl::control
