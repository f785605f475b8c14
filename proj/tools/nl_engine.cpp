// nl_engine: run the instrument live, render scripts offline, or print the
// effective configuration.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "neolightning/control/config.hpp"
#include "neolightning/control/live.hpp"
#include "neolightning/control/script.hpp"
#include "neolightning/dsp/wav.hpp"

namespace {

using nl::control::EngineConfig;

// --config wins, then $NL_CONFIG, then built-in defaults.
EngineConfig resolve_config(const std::string& path) {
  if (!path.empty()) return nl::control::load_config(path);
  if (const char* env = std::getenv("NL_CONFIG"); env != nullptr && *env != '\0') {
    return nl::control::load_config(env);
  }
  return EngineConfig{};
}

std::string default_report_path(const std::string& wav_path) {
  const auto dot = wav_path.rfind(".wav");
  const std::string stem = dot == std::string::npos ? wav_path : wav_path.substr(0, dot);
  return stem + ".state.txt";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"NeoLightning gesture-to-sound engine"};
  app.require_subcommand(1);

  std::string config_path;

  auto* run = app.add_subcommand("run", "Run the live engine");
  std::string input;
  std::string listen;
  std::string ws;
  bool no_audio = false;
  bool no_ui = false;
  std::string record;
  bool raw_stdout = false;
  run->add_option("--config", config_path, "Engine config (JSON)");
  run->add_option("--input", input, "Input mode")->check(CLI::IsMember({"osc", "keys"}));
  run->add_option("--listen", listen, "UDP landmark listener, addr:port");
  run->add_option("--ws", ws, "UI WebSocket endpoint, addr:port");
  run->add_flag("--no-audio", no_audio, "Do not run the audio activity");
  run->add_flag("--no-ui", no_ui, "Do not serve the UI broadcast");
  run->add_option("--record", record, "Record live output to a float WAV file");
  run->add_flag("--raw-stdout", raw_stdout, "Stream float32 LE stereo to stdout (pipe into a player)");

  auto* render = app.add_subcommand("render", "Replay a script offline into a WAV file");
  std::string script_path;
  std::string out_path;
  std::string report_path;
  double duration = 0.0;
  render->add_option("--config", config_path, "Engine config (JSON)");
  render->add_option("--script", script_path, "Event script")->required();
  render->add_option("--out", out_path, "Output WAV")->required();
  render->add_option("--duration", duration, "Seconds to render")->required()->check(CLI::NonNegativeNumber);
  render->add_option("--report", report_path, "Final-state report (default: <out>.state.txt)");

  auto* print = app.add_subcommand("print-config", "Print the effective configuration");
  print->add_option("--config", config_path, "Engine config (JSON)");

  CLI11_PARSE(app, argc, argv);

  try {
    EngineConfig config = resolve_config(config_path);

    if (*print) {
      std::cout << nl::control::dump_config(config) << '\n';
      return 0;
    }

    if (*render) {
      const auto script = nl::control::load_script(script_path);
      const auto result = nl::control::run_script(config, script, duration);
      nl::dsp::write_wav(out_path, result.render.samples, static_cast<std::uint32_t>(config.dsp.sample_rate), 2);
      const std::string report = nl::control::format_report(result.final_state);
      const std::string report_file = report_path.empty() ? default_report_path(out_path) : report_path;
      std::ofstream(report_file) << report;
      std::cout << report;
      return 0;
    }

    if (!input.empty()) config.network.input = nl::control::parse_input_mode(input);
    if (!listen.empty()) config.network.listen = listen;
    if (!ws.empty()) config.network.ws = ws;
    config.validate();

    nl::control::LiveOptions options;
    options.serve_ui = !no_ui;
    options.terminal_keys = true;
    if (no_audio) {
      options.audio = nl::control::AudioMode::None;
    } else if (!record.empty()) {
      options.audio = nl::control::AudioMode::Record;
      options.record_path = record;
    } else if (raw_stdout) {
      options.audio = nl::control::AudioMode::RawStdout;
    }
    return nl::control::run_live(config, options);
  } catch (const nl::control::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
  } catch (const nl::control::ScriptError& e) {
    std::cerr << "script error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 1;
}
