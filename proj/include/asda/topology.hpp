#pragma once

#include <cstddef>
#include <vector>

#include "asda/config.hpp"
#include "asda/node.hpp"

namespace asda {

struct Topology
{
  std::vector<NodeState> sensors; // ids 0..node_count-1
  NodeState base_station;         // id node_count

  std::size_t attacker_count () const;
};

/// ceil(ratio * n), with a guard against ratio*n landing a few ulps above an
/// integer.
std::size_t attacker_count_for (double ratio, std::size_t node_count);

/// Uniform positions over the field from the topology stream of the seed;
/// base station at the configured sink position with unbounded energy.
Topology build_topology (const SimConfig &config);

DutyCycleSchedule make_schedule (const SimConfig &config);

} // namespace asda
