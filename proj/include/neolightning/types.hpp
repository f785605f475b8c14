#pragma once

#include <chrono>
#include <cstdint>
#include <string_view>

namespace nl {

/// Which hand (and therefore which wand) a piece of data belongs to.
/// Left drives the blue sphere, Right drives the red one.
enum class Side : std::uint8_t { Left = 0, Right = 1 };

inline constexpr std::size_t kSideCount = 2;

constexpr std::size_t index_of(Side side) { return static_cast<std::size_t>(side); }

constexpr Side other(Side side) { return side == Side::Left ? Side::Right : Side::Left; }

constexpr std::string_view side_code(Side side) { return side == Side::Left ? "L" : "R"; }

/// Engine time. Microseconds on whichever clock drives the engine (steady
/// clock when live, a virtual clock under script replay).
using Micros = std::chrono::microseconds;

inline constexpr Micros millis(std::int64_t ms) { return Micros{ms * 1000}; }

}  // namespace nl
