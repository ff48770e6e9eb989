#pragma once

#include <cmath>
#include <compare>
#include <cstdint>

namespace capsim {

/// Simulation time: integer microseconds since scenario start.
/// All timing state is kept in exact integer microseconds; conversion to
/// milliseconds happens only at the output boundary.
struct SimTime {
  std::uint64_t us = 0;
  constexpr auto operator<=>(const SimTime&) const = default;
};

constexpr SimTime usec(std::uint64_t v) { return {v}; }
constexpr SimTime msec(std::uint64_t v) { return {v * 1000u}; }
constexpr SimTime seconds(std::uint64_t v) { return {v * 1000000u}; }

constexpr SimTime operator+(SimTime a, SimTime b) { return {a.us + b.us}; }
constexpr SimTime operator-(SimTime a, SimTime b) { return {a.us - b.us}; }

constexpr double to_ms(SimTime t) { return static_cast<double>(t.us) / 1000.0; }
constexpr double to_seconds(SimTime t) { return static_cast<double>(t.us) / 1e6; }

/// Nearest-microsecond conversion of a non-negative millisecond duration.
inline SimTime from_ms(double ms) {
  return {static_cast<std::uint64_t>(std::llround(ms * 1000.0))};
}

}  // namespace capsim
