#include "neolightning/control/live.hpp"

#include <csignal>
#include <iostream>

#include "neolightning/control/terminal_keys.hpp"
#include "neolightning/proto/ingest.hpp"

namespace nl::control {
namespace {

std::atomic<bool> g_interrupted{false};

extern "C" void on_signal(int) { g_interrupted.store(true); }

}  // namespace

LiveEngine::LiveEngine(EngineConfig config, LiveOptions options)
    : config_(std::move(config)),
      options_(std::move(options)),
      engine_(config_),
      hub_(config_.control.broadcast_max_hz, config_.control.client_queue),
      epoch_(std::chrono::steady_clock::now()) {
  config_.validate();
  for (auto& queue : ingest_queues_) {
    queue = std::make_unique<BoundedQueue<proto::IngestEvent>>(config_.ingest.queue_capacity);
  }
  latest_ = engine_.snapshot(Micros{0});
  audio_slot_.publish(latest_);
}

LiveEngine::~LiveEngine() { stop(); }

Micros LiveEngine::now() const {
  return std::chrono::duration_cast<Micros>(std::chrono::steady_clock::now() - epoch_);
}

void LiveEngine::start() {
  if (running_) return;
  if (config_.network.input == InputMode::Script) {
    throw std::runtime_error("script input is only available through the render command");
  }
  if (config_.network.input == InputMode::Osc) {
    listener_ = std::make_unique<proto::UdpListener>(proto::parse_endpoint(config_.network.listen));
  }
  if (options_.serve_ui) {
    ws_ = std::make_unique<WsServer>(proto::parse_endpoint(config_.network.ws), hub_,
                                     [this](const ClientMessage& m) { inbound_.push(m); });
  }
  if (options_.audio != AudioMode::None) {
    std::unique_ptr<AudioSink> sink;
    switch (options_.audio) {
      case AudioMode::Record:
        sink = std::make_unique<WavRecordSink>(options_.record_path, config_.dsp.sample_rate);
        break;
      case AudioMode::RawStdout:
        sink = std::make_unique<RawStreamSink>(stdout);
        break;
      default:
        sink = std::make_unique<NullSink>();
        break;
    }
    audio_ = std::make_unique<AudioThread>(config_.dsp, audio_slot_, std::move(sink));
  }

  stopping_ = false;
  running_ = true;
  if (listener_) {
    ingest_thread_ = std::thread([this] {
      proto::IngestFilter filter(config_.ingest);
      try {
        proto::run_ingest(
            *listener_, filter, [this] { return now(); },
            [&] {
              ingest_dropped_.store(filter.stats().dropped(), std::memory_order_relaxed);
              return stopping_.load();
            },
            [this](const proto::IngestEvent& event) {
              const Side side = std::holds_alternative<proto::LandmarkFrame>(event)
                                    ? std::get<proto::LandmarkFrame>(event).side
                                    : std::get<proto::HandLost>(event).side;
              ingest_queues_[index_of(side)]->push(event);
            });
      } catch (const proto::TransportError& e) {
        std::cerr << "ingest stopped: " << e.what() << '\n';
      }
    });
  }
  if (ws_) ws_->start();
  if (audio_) audio_->start();
  control_thread_ = std::thread([this] { control_loop(); });
}

void LiveEngine::control_loop() {
  using clock = std::chrono::steady_clock;
  const auto tick = std::chrono::duration_cast<clock::duration>(std::chrono::duration<double>(1.0 / config_.control.tick_hz));
  std::optional<TerminalKeys> terminal;
  if (options_.terminal_keys && config_.network.input == InputMode::Keys) terminal.emplace();

  std::vector<proto::IngestEvent> events;
  std::vector<ClientMessage> messages;
  auto next = clock::now();
  while (!stopping_.load()) {
    const Micros t = now();
    for (auto& queue : ingest_queues_) {
      events.clear();
      queue->drain_into(events);
      for (const auto& event : events) engine_.handle_ingest(event, t);
    }
    messages.clear();
    inbound_.drain_into(messages);
    for (const auto& message : messages) {
      if (const auto* key = std::get_if<KeyMessage>(&message)) engine_.handle_key_code(key->code);
    }
    if (terminal) {
      const auto typed = terminal->poll();
      for (const Key key : typed.keys) engine_.handle_key(key);
      engine_.diagnostics().ignored_keys += typed.ignored;
    }

    auto& diag = engine_.diagnostics();
    std::uint64_t queue_drops = 0;
    for (const auto& queue : ingest_queues_) queue_drops += queue->dropped();
    diag.dropped_frames = ingest_dropped_.load(std::memory_order_relaxed) + queue_drops;
    if (audio_) {
      diag.nan_resets = audio_->nan_resets();
      diag.underruns = audio_->underruns();
    }

    const auto snapshot = engine_.snapshot(t);
    audio_slot_.publish(snapshot);
    hub_.publish(state_message_json(snapshot), t);
    hub_.flush_due(t);
    {
      std::lock_guard lock(latest_mutex_);
      latest_ = snapshot;
    }

    next += tick;
    const auto wall = clock::now();
    if (wall > next + tick) next = wall;
    std::this_thread::sleep_until(next);
  }
}

void LiveEngine::stop() {
  if (!running_) return;
  running_ = false;
  // Audio first so the fade renders while state is still being published.
  if (audio_) audio_->stop();
  stopping_ = true;
  if (control_thread_.joinable()) control_thread_.join();
  if (ingest_thread_.joinable()) ingest_thread_.join();
  if (ws_) ws_->stop();
  listener_.reset();
}

std::uint16_t LiveEngine::udp_port() const { return listener_ ? listener_->port() : 0; }

std::uint16_t LiveEngine::ws_port() const { return ws_ ? ws_->port() : 0; }

StateSnapshot LiveEngine::latest_snapshot() const {
  std::lock_guard lock(latest_mutex_);
  return latest_;
}

void LiveEngine::post_key(const std::string& code) { inbound_.push(KeyMessage{code}); }

std::uint64_t LiveEngine::audio_underruns() const { return audio_ ? audio_->underruns() : 0; }

int run_live(const EngineConfig& config, const LiveOptions& options) {
  g_interrupted = false;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);

  LiveEngine engine(config, options);
  try {
    engine.start();
  } catch (const std::exception& e) {
    std::cerr << "startup failed: " << e.what() << '\n';
    return 2;
  }
  std::cerr << "neolightning running";
  if (engine.udp_port() != 0) std::cerr << ", landmarks on udp " << engine.udp_port();
  if (engine.ws_port() != 0) std::cerr << ", ui on ws port " << engine.ws_port();
  std::cerr << " (Ctrl-C to stop)\n";

  while (!g_interrupted.load()) std::this_thread::sleep_for(std::chrono::milliseconds(20));
  engine.stop();
  std::cerr << "stopped\n";
  return 0;
}

}  // namespace nl::control
