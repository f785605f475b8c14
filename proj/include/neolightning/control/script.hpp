#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "neolightning/control/engine.hpp"
#include "neolightning/dsp/offline.hpp"

namespace nl::control {

// Script format, one event per line, '#' starts a comment:
//   <t_ms> <KEY>                          e.g. "100 W", "250 Left"
//   <t_ms> GESTURE <L|R> MOVE <dx> <dy>
//   <t_ms> GESTURE <L|R> OPEN|CLOSE|SWIPE
// Timestamps are non-negative and non-decreasing.
struct ScriptEvent {
  Micros time{0};
  int line = 0;
  std::variant<Key, gesture::GestureEvent> action;
};

class ScriptError : public std::runtime_error {
 public:
  ScriptError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

std::vector<ScriptEvent> parse_script(const std::string& text);
std::vector<ScriptEvent> load_script(const std::filesystem::path& path);

struct ScriptResult {
  dsp::OfflineRender render;
  StateSnapshot final_state;
};

/// Replays the script on a virtual clock while rendering offline. Events
/// take effect at the first audio block boundary at or after their time.
ScriptResult run_script(const EngineConfig& config, const std::vector<ScriptEvent>& script,
                        double duration_s);

/// key=value text, one line per field, stable order.
std::string format_report(const StateSnapshot& snapshot);

}  // namespace nl::control
