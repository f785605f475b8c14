#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "neolightning/wand/wand_model.hpp"

namespace nl::control {

// Keyboard layout: WASD + Q/Z + O drive the left (blue) wand, arrows + E/C + P
// drive the right (red) wand.
enum class Key : std::uint8_t { W, A, S, D, Up, Left, Down, Right, Q, Z, E, C, O, P };

inline constexpr std::array<Key, 14> kAllKeys{Key::W,    Key::A,    Key::S, Key::D, Key::Up,
                                              Key::Left, Key::Down, Key::Right, Key::Q, Key::Z,
                                              Key::E,    Key::C,    Key::O, Key::P};

struct KeyAction {
  Key key;
  Micros time{0};
};

std::string_view key_name(Key key);

/// Accepts the names used by key_name ("W", "Up", ...); case-sensitive.
std::optional<Key> parse_key(std::string_view name);

wand::WandAction key_to_action(Key key, const wand::WandConfig& config);

}  // namespace nl::control
