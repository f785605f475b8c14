#include "neolightning/control/config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "neolightning/proto/udp_listener.hpp"

namespace nl::control {
namespace {

using nlohmann::json;

// Reads known fields out of one JSON object section and rejects the rest.
class Section {
 public:
  Section(const json& root, std::string name) : name_(std::move(name)) {
    if (!root.contains(name_)) return;
    node_ = &root.at(name_);
    if (!node_->is_object()) throw ConfigError(name_, "section must be an object");
  }

  template <typename T>
  Section& field(const std::string& key, T& target) {
    known_.push_back(key);
    if (node_ == nullptr || !node_->contains(key)) return *this;
    const auto& value = node_->at(key);
    try {
      if constexpr (std::is_same_v<T, bool>) {
        if (!value.is_boolean()) throw ConfigError(path(key), "expected a boolean");
      } else if constexpr (std::is_arithmetic_v<T>) {
        if (!value.is_number()) throw ConfigError(path(key), "expected a number");
        if constexpr (std::is_integral_v<T>) {
          if (!value.is_number_integer()) throw ConfigError(path(key), "expected an integer");
          if constexpr (std::is_unsigned_v<T>) {
            if (value.get<std::int64_t>() < 0) throw ConfigError(path(key), "must be non-negative");
          }
        }
      } else {
        if (!value.is_string()) throw ConfigError(path(key), "expected a string");
      }
      target = value.get<T>();
    } catch (const json::exception& e) {
      throw ConfigError(path(key), e.what());
    }
    return *this;
  }

  void finish() const {
    if (node_ == nullptr) return;
    for (const auto& [key, value] : node_->items()) {
      if (std::find(known_.begin(), known_.end(), key) == known_.end()) {
        throw ConfigError(path(key), "unknown key");
      }
    }
  }

 private:
  std::string path(const std::string& key) const { return name_ + "." + key; }

  std::string name_;
  const json* node_ = nullptr;
  std::vector<std::string> known_;
};

template <typename F>
void checked(const std::string& section, F&& check) {
  try {
    check();
  } catch (const std::invalid_argument& e) {
    std::string what = e.what();
    const auto space = what.find(' ');
    throw ConfigError(space == std::string::npos ? section : what.substr(0, space), what);
  }
}

}  // namespace

std::string input_mode_name(InputMode mode) {
  switch (mode) {
    case InputMode::Osc:
      return "osc";
    case InputMode::Keys:
      return "keys";
    case InputMode::Script:
      return "script";
  }
  return "osc";
}

InputMode parse_input_mode(const std::string& text) {
  if (text == "osc") return InputMode::Osc;
  if (text == "keys") return InputMode::Keys;
  if (text == "script") return InputMode::Script;
  throw ConfigError("network.input", "expected osc, keys or script, got '" + text + "'");
}

void EngineConfig::validate() const {
  checked("network", [&] {
    proto::parse_endpoint(network.listen);
    proto::parse_endpoint(network.ws);
  });
  if (!(ingest.min_confidence >= 0.0 && ingest.min_confidence <= 1.0)) {
    throw ConfigError("ingest.min_confidence", "must lie in [0,1]");
  }
  if (ingest.hand_timeout_ms <= 0) throw ConfigError("ingest.hand_timeout_ms", "must be positive");
  if (ingest.queue_capacity == 0) throw ConfigError("ingest.queue_capacity", "must be positive");
  checked("gesture", [&] { gesture.validate(); });
  checked("wand", [&] { wand.validate(); });
  checked("dsp", [&] { dsp.validate(); });
  checked("mapping", [&] { mapping.validate(dsp.sample_rate); });
  if (!(control.tick_hz >= 1.0 && control.tick_hz <= 2000.0)) {
    throw ConfigError("control.tick_hz", "must lie in [1,2000]");
  }
  if (!(control.broadcast_max_hz > 0.0)) throw ConfigError("control.broadcast_max_hz", "must be positive");
  if (control.client_queue == 0) throw ConfigError("control.client_queue", "must be positive");
}

EngineConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("<document>", e.what());
  }
  if (!root.is_object()) throw ConfigError("<document>", "config must be a JSON object");

  static const std::vector<std::string> kSections{"network", "ingest", "gesture", "wand",
                                                  "mapping", "dsp",    "control"};
  for (const auto& [key, value] : root.items()) {
    if (std::find(kSections.begin(), kSections.end(), key) == kSections.end()) {
      throw ConfigError(key, "unknown section");
    }
  }

  EngineConfig c;
  std::string input = input_mode_name(c.network.input);
  Section(root, "network").field("input", input).field("listen", c.network.listen).field("ws", c.network.ws).finish();
  c.network.input = parse_input_mode(input);

  Section(root, "ingest")
      .field("min_confidence", c.ingest.min_confidence)
      .field("hand_timeout_ms", c.ingest.hand_timeout_ms)
      .field("queue_capacity", c.ingest.queue_capacity)
      .finish();

  Section(root, "gesture")
      .field("theta_open", c.gesture.theta_open)
      .field("theta_close", c.gesture.theta_close)
      .field("repeat_ms", c.gesture.repeat_ms)
      .field("move_deadzone", c.gesture.move_deadzone)
      .field("max_step", c.gesture.max_step)
      .field("swipe_dist", c.gesture.swipe_dist)
      .field("swipe_window_ms", c.gesture.swipe_window_ms)
      .field("swipe_refractory_ms", c.gesture.swipe_refractory_ms)
      .finish();

  Section(root, "wand")
      .field("key_step", c.wand.key_step)
      .field("depth_step", c.wand.depth_step)
      .field("gesture_gain", c.wand.gesture_gain)
      .field("r_min", c.wand.r_min)
      .field("r_max", c.wand.r_max)
      .finish();

  Section(root, "mapping")
      .field("f_min", c.mapping.f_min)
      .field("f_max", c.mapping.f_max)
      .field("c_min", c.mapping.c_min)
      .field("c_max", c.mapping.c_max)
      .field("rt_min", c.mapping.rt_min)
      .field("rt_max", c.mapping.rt_max)
      .field("amp_floor", c.mapping.amp_floor)
      .field("xmod_exponent", c.mapping.xmod_exponent)
      .finish();

  Section(root, "dsp")
      .field("sample_rate", c.dsp.sample_rate)
      .field("block_size", c.dsp.block_size)
      .field("xmod_depth", c.dsp.xmod_depth)
      .field("enable_xmod", c.dsp.enable_xmod)
      .field("naive_saw", c.dsp.naive_saw)
      .field("filter_q", c.dsp.filter_q)
      .field("smoothing_ms", c.dsp.smoothing_ms)
      .field("pan", c.dsp.pan)
      .field("reverb_mix", c.dsp.reverb_mix)
      .field("max_feedback", c.dsp.max_feedback)
      .field("fade_ms", c.dsp.fade_ms)
      .finish();

  Section(root, "control")
      .field("tick_hz", c.control.tick_hz)
      .field("broadcast_max_hz", c.control.broadcast_max_hz)
      .field("client_queue", c.control.client_queue)
      .finish();

  c.validate();
  return c;
}

EngineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<file>", "cannot read config '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string dump_config(const EngineConfig& c) {
  json root;
  root["network"] = {{"input", input_mode_name(c.network.input)},
                     {"listen", c.network.listen},
                     {"ws", c.network.ws}};
  root["ingest"] = {{"min_confidence", c.ingest.min_confidence},
                    {"hand_timeout_ms", c.ingest.hand_timeout_ms},
                    {"queue_capacity", c.ingest.queue_capacity}};
  root["gesture"] = {{"theta_open", c.gesture.theta_open},
                     {"theta_close", c.gesture.theta_close},
                     {"repeat_ms", c.gesture.repeat_ms},
                     {"move_deadzone", c.gesture.move_deadzone},
                     {"max_step", c.gesture.max_step},
                     {"swipe_dist", c.gesture.swipe_dist},
                     {"swipe_window_ms", c.gesture.swipe_window_ms},
                     {"swipe_refractory_ms", c.gesture.swipe_refractory_ms}};
  root["wand"] = {{"key_step", c.wand.key_step},
                  {"depth_step", c.wand.depth_step},
                  {"gesture_gain", c.wand.gesture_gain},
                  {"r_min", c.wand.r_min},
                  {"r_max", c.wand.r_max}};
  root["mapping"] = {{"f_min", c.mapping.f_min},         {"f_max", c.mapping.f_max},
                     {"c_min", c.mapping.c_min},         {"c_max", c.mapping.c_max},
                     {"rt_min", c.mapping.rt_min},       {"rt_max", c.mapping.rt_max},
                     {"amp_floor", c.mapping.amp_floor}, {"xmod_exponent", c.mapping.xmod_exponent}};
  root["dsp"] = {{"sample_rate", c.dsp.sample_rate},
                 {"block_size", c.dsp.block_size},
                 {"xmod_depth", c.dsp.xmod_depth},
                 {"enable_xmod", c.dsp.enable_xmod},
                 {"naive_saw", c.dsp.naive_saw},
                 {"filter_q", c.dsp.filter_q},
                 {"smoothing_ms", c.dsp.smoothing_ms},
                 {"pan", c.dsp.pan},
                 {"reverb_mix", c.dsp.reverb_mix},
                 {"max_feedback", c.dsp.max_feedback},
                 {"fade_ms", c.dsp.fade_ms}};
  root["control"] = {{"tick_hz", c.control.tick_hz},
                     {"broadcast_max_hz", c.control.broadcast_max_hz},
                     {"client_queue", c.control.client_queue}};
  return root.dump(2);
}

}  // namespace nl::control
