#include "neolightning/control/keys.hpp"

namespace nl::control {

std::string_view key_name(Key key) {
  switch (key) {
    case Key::W: return "W";
    case Key::A: return "A";
    case Key::S: return "S";
    case Key::D: return "D";
    case Key::Up: return "Up";
    case Key::Left: return "Left";
    case Key::Down: return "Down";
    case Key::Right: return "Right";
    case Key::Q: return "Q";
    case Key::Z: return "Z";
    case Key::E: return "E";
    case Key::C: return "C";
    case Key::O: return "O";
    case Key::P: return "P";
  }
  return "?";
}

std::optional<Key> parse_key(std::string_view name) {
  for (const Key key : kAllKeys) {
    if (key_name(key) == name) return key;
  }
  return std::nullopt;
}

wand::WandAction key_to_action(Key key, const wand::WandConfig& config) {
  using wand::WandAction;
  const double k = config.key_step;
  const double d = config.depth_step;
  switch (key) {
    case Key::W: return WandAction::delta(Side::Left, 0.0, +k, 0.0);
    case Key::A: return WandAction::delta(Side::Left, -k, 0.0, 0.0);
    case Key::S: return WandAction::delta(Side::Left, 0.0, -k, 0.0);
    case Key::D: return WandAction::delta(Side::Left, +k, 0.0, 0.0);
    case Key::Up: return WandAction::delta(Side::Right, 0.0, +k, 0.0);
    case Key::Left: return WandAction::delta(Side::Right, -k, 0.0, 0.0);
    case Key::Down: return WandAction::delta(Side::Right, 0.0, -k, 0.0);
    case Key::Right: return WandAction::delta(Side::Right, +k, 0.0, 0.0);
    case Key::Q: return WandAction::delta(Side::Left, 0.0, 0.0, +d);
    case Key::Z: return WandAction::delta(Side::Left, 0.0, 0.0, -d);
    case Key::E: return WandAction::delta(Side::Right, 0.0, 0.0, +d);
    case Key::C: return WandAction::delta(Side::Right, 0.0, 0.0, -d);
    case Key::O: return WandAction::toggle(Side::Left);
    case Key::P: return WandAction::toggle(Side::Right);
  }
  return WandAction::delta(Side::Left, 0.0, 0.0, 0.0);
}

}  // namespace nl::control
