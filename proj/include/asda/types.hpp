#pragma once

#include <cstdint>
#include <limits>

namespace asda {

using NodeId = std::uint32_t;

inline constexpr NodeId kBroadcast = std::numeric_limits<NodeId>::max ();

struct Position
{
  double x = 0.0;
  double y = 0.0;

  friend bool operator== (const Position &, const Position &) = default;
};

} // namespace asda
