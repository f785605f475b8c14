#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "neolightning/dsp/dsp_config.hpp"
#include "neolightning/gesture/classifier.hpp"
#include "neolightning/mapping/mapping.hpp"
#include "neolightning/proto/ingest.hpp"
#include "neolightning/wand/wand_model.hpp"

namespace nl::control {

enum class InputMode : std::uint8_t { Osc, Keys, Script };

struct NetworkConfig {
  InputMode input = InputMode::Osc;
  std::string listen = "0.0.0.0:9000";
  std::string ws = "127.0.0.1:8080";
};

struct ControlConfig {
  double tick_hz = 120.0;
  double broadcast_max_hz = 30.0;  // per client
  std::size_t client_queue = 4;
};

/// Every tunable in the engine, grouped by the module that owns it. The JSON
/// document uses the same section and field names.
struct EngineConfig {
  NetworkConfig network;
  proto::IngestConfig ingest;
  gesture::GestureConfig gesture;
  wand::WandConfig wand;
  mapping::MapConfig mapping;
  dsp::DspConfig dsp;
  ControlConfig control;

  /// Throws ConfigError naming the first bad field.
  void validate() const;
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

std::string input_mode_name(InputMode mode);
InputMode parse_input_mode(const std::string& text);

/// Missing fields keep their defaults; unknown sections or keys are errors.
EngineConfig parse_config(const std::string& json_text);
EngineConfig load_config(const std::filesystem::path& path);

/// Effective config as a pretty-printed JSON document.
std::string dump_config(const EngineConfig& config);

}  // namespace nl::control
