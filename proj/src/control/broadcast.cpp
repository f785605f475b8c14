#include "neolightning/control/broadcast.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

namespace nl::control {

std::string state_message_json(const StateSnapshot& s) {
  nlohmann::json wands = nlohmann::json::array();
  for (const auto* w : {&s.scene.left, &s.scene.right}) {
    const auto& v = s.params.voice(w->side);
    wands.push_back({{"side", std::string(side_code(w->side))},
                     {"x", w->x},
                     {"y", w->y},
                     {"z", w->z},
                     {"active", w->active},
                     {"radius", w->radius},
                     {"freq_hz", v.freq},
                     {"amp", v.amp},
                     {"cutoff_hz", v.cutoff},
                     {"rt60_s", v.rt60}});
  }
  nlohmann::json message = {{"type", "state"},
                            {"seq", s.seq},
                            {"t_us", s.time.count()},
                            {"wands", std::move(wands)},
                            {"overlap", s.overlap},
                            {"diag", {{"nan_resets", s.diag.nan_resets}, {"dropped_frames", s.diag.dropped_frames}}}};
  return message.dump();
}

ClientMessage parse_client_message(std::string_view text) {
  const auto doc = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) return InvalidMessage{"not a JSON object"};
  const auto type = doc.find("type");
  if (type == doc.end() || !type->is_string()) return InvalidMessage{"missing string field 'type'"};
  if (*type == "key") {
    const auto code = doc.find("code");
    if (code == doc.end() || !code->is_string()) return InvalidMessage{"key message without string 'code'"};
    return KeyMessage{code->get<std::string>()};
  }
  if (*type == "hello") {
    const auto client = doc.find("client");
    if (client == doc.end() || !client->is_string()) return InvalidMessage{"hello without string 'client'"};
    return HelloMessage{client->get<std::string>()};
  }
  return InvalidMessage{"unknown message type '" + type->get<std::string>() + "'"};
}

BroadcastHub::BroadcastHub(double max_rate_hz, std::size_t queue_capacity)
    : min_interval_(static_cast<std::int64_t>(std::ceil(1e6 / max_rate_hz))),
      queue_capacity_(queue_capacity == 0 ? 1 : queue_capacity) {}

ClientId BroadcastHub::add_client() {
  std::lock_guard lock(mutex_);
  const ClientId id = next_id_++;
  clients_.emplace(id, Client{});
  return id;
}

void BroadcastHub::remove_client(ClientId id) {
  std::lock_guard lock(mutex_);
  clients_.erase(id);
}

void BroadcastHub::enqueue_locked(Client& client, std::string message, Micros now) {
  if (client.queue.size() == queue_capacity_) {
    client.queue.pop_front();
    ++client.dropped;
  }
  client.queue.push_back(std::move(message));
  client.next_send = now + min_interval_;
}

void BroadcastHub::publish(const std::string& message, Micros now) {
  std::vector<ClientId> woken;
  std::function<void(ClientId)> notify;
  {
    std::lock_guard lock(mutex_);
    if (clients_.empty()) return;
    notify = notify_;
    for (auto& [id, client] : clients_) {
      if (now >= client.next_send) {
        client.pending.reset();
        enqueue_locked(client, message, now);
        woken.push_back(id);
      } else {
        client.pending = message;
      }
    }
  }
  if (notify) {
    for (const auto id : woken) notify(id);
  }
}

void BroadcastHub::flush_due(Micros now) {
  std::vector<ClientId> woken;
  std::function<void(ClientId)> notify;
  {
    std::lock_guard lock(mutex_);
    notify = notify_;
    for (auto& [id, client] : clients_) {
      if (client.pending && now >= client.next_send) {
        enqueue_locked(client, std::move(*client.pending), now);
        client.pending.reset();
        woken.push_back(id);
      }
    }
  }
  if (notify) {
    for (const auto id : woken) notify(id);
  }
}

std::vector<std::string> BroadcastHub::take(ClientId id) {
  std::lock_guard lock(mutex_);
  std::vector<std::string> out;
  const auto it = clients_.find(id);
  if (it == clients_.end()) return out;
  out.assign(std::make_move_iterator(it->second.queue.begin()), std::make_move_iterator(it->second.queue.end()));
  it->second.queue.clear();
  return out;
}

std::size_t BroadcastHub::client_count() const {
  std::lock_guard lock(mutex_);
  return clients_.size();
}

std::uint64_t BroadcastHub::dropped(ClientId id) const {
  std::lock_guard lock(mutex_);
  const auto it = clients_.find(id);
  return it == clients_.end() ? 0 : it->second.dropped;
}

void BroadcastHub::set_notify(std::function<void(ClientId)> notify) {
  std::lock_guard lock(mutex_);
  notify_ = std::move(notify);
}

}  // namespace nl::control
