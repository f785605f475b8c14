#include "neolightning/control/script.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "neolightning/dsp/synth.hpp"

namespace nl::control {
namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

double parse_number(const std::string& text, int line, const char* what) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw ScriptError(line, std::string("bad ") + what + " '" + text + "'");
  }
  return value;
}

Side parse_side(const std::string& text, int line) {
  if (text == "L") return Side::Left;
  if (text == "R") return Side::Right;
  throw ScriptError(line, "side must be L or R, got '" + text + "'");
}

gesture::GestureEvent parse_gesture(const std::vector<std::string>& words, Micros time, int line) {
  if (words.size() < 4) throw ScriptError(line, "GESTURE needs <side> <kind>");
  gesture::GestureEvent event;
  event.side = parse_side(words[2], line);
  event.time = time;
  const std::string& kind = words[3];
  std::size_t expected = 4;
  if (kind == "MOVE") {
    expected = 6;
    if (words.size() != expected) throw ScriptError(line, "MOVE needs <dx> <dy>");
    event.kind = gesture::GestureKind::MoveDelta;
    event.dx = parse_number(words[4], line, "dx");
    event.dy = parse_number(words[5], line, "dy");
    event.magnitude = std::hypot(event.dx, event.dy);
  } else if (kind == "OPEN") {
    event.kind = gesture::GestureKind::OpenHand;
  } else if (kind == "CLOSE") {
    event.kind = gesture::GestureKind::CloseHand;
  } else if (kind == "SWIPE") {
    event.kind = gesture::GestureKind::Swipe;
  } else {
    throw ScriptError(line, "unknown gesture kind '" + kind + "'");
  }
  if (words.size() != expected) throw ScriptError(line, "unexpected arguments after " + kind);
  return event;
}

}  // namespace

std::vector<ScriptEvent> parse_script(const std::string& text) {
  std::vector<ScriptEvent> events;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  Micros last{0};
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto words = split_words(raw);
    if (words.empty()) continue;
    if (words.size() < 2) throw ScriptError(line, "expected '<t_ms> <event>'");

    const double t_ms = parse_number(words[0], line, "timestamp");
    if (t_ms < 0.0) throw ScriptError(line, "negative timestamp");
    const Micros time{std::llround(t_ms * 1000.0)};
    if (time < last) throw ScriptError(line, "timestamp goes backwards");
    last = time;

    ScriptEvent event{time, line, Key::W};
    if (words[1] == "GESTURE") {
      event.action = parse_gesture(words, time, line);
    } else {
      const auto key = parse_key(words[1]);
      if (!key) throw ScriptError(line, "unknown key '" + words[1] + "'");
      if (words.size() != 2) throw ScriptError(line, "unexpected arguments after key");
      event.action = *key;
    }
    events.push_back(std::move(event));
  }
  return events;
}

std::vector<ScriptEvent> load_script(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScriptError(0, "cannot read script '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_script(buffer.str());
}

ScriptResult run_script(const EngineConfig& config, const std::vector<ScriptEvent>& script,
                        double duration_s) {
  if (!(duration_s >= 0.0)) throw std::invalid_argument("duration must be non-negative");
  config.validate();

  Engine engine(config);
  dsp::Synth synth(config.dsp);
  const double fs = config.dsp.sample_rate;
  const std::size_t block = config.dsp.block_size;
  const auto total = static_cast<std::size_t>(std::llround(duration_s * fs));

  ScriptResult result;
  result.render.sample_rate = fs;
  result.render.samples.assign(total * 2, 0.0F);

  std::size_t next = 0;
  Micros now{0};
  synth.set_params(engine.params());
  for (std::size_t start = 0; start < total; start += block) {
    now = Micros{static_cast<std::int64_t>(start * 1'000'000 / static_cast<std::size_t>(fs))};
    bool changed = false;
    while (next < script.size() && script[next].time <= now) {
      std::visit(
          [&](const auto& action) {
            using T = std::decay_t<decltype(action)>;
            if constexpr (std::is_same_v<T, Key>) {
              engine.handle_key(action);
            } else {
              engine.handle_gesture(action);
            }
          },
          script[next].action);
      ++next;
      changed = true;
    }
    if (changed) synth.set_params(engine.params());
    const std::size_t frames = std::min(block, total - start);
    synth.render(std::span<float>(result.render.samples).subspan(start * 2, frames * 2));
  }

  result.render.diagnostics = synth.diagnostics();
  engine.diagnostics().nan_resets = synth.diagnostics().nan_resets;
  result.final_state = engine.snapshot(Micros{std::llround(duration_s * 1e6)});
  return result;
}

std::string format_report(const StateSnapshot& s) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "seq=" << s.seq << '\n' << "t_us=" << s.time.count() << '\n';
  for (const auto* w : {&s.scene.left, &s.scene.right}) {
    const std::string p = w->side == Side::Left ? "left." : "right.";
    const auto& v = s.params.voice(w->side);
    out << p << "x=" << w->x << '\n'
        << p << "y=" << w->y << '\n'
        << p << "z=" << w->z << '\n'
        << p << "active=" << (w->active ? "true" : "false") << '\n'
        << p << "radius=" << w->radius << '\n'
        << p << "freq_hz=" << v.freq << '\n'
        << p << "amp=" << v.amp << '\n'
        << p << "cutoff_hz=" << v.cutoff << '\n'
        << p << "rt60_s=" << v.rt60 << '\n';
  }
  out << "overlap=" << s.overlap << '\n'
      << "xmod=" << s.params.xmod << '\n'
      << "diag.nan_resets=" << s.diag.nan_resets << '\n'
      << "diag.dropped_frames=" << s.diag.dropped_frames << '\n'
      << "diag.ignored_keys=" << s.diag.ignored_keys << '\n';
  return out.str();
}

}  // namespace nl::control
