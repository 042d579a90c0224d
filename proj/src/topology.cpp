#include "asda/topology.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "asda/random.hpp"

namespace asda {

std::string_view
to_string (Role role)
{
  switch (role)
    {
    case Role::Member:
      return "member";
    case Role::ClusterHead:
      return "cluster_head";
    case Role::BaseStation:
      return "base_station";
    case Role::Attacker:
      return "attacker";
    }
  return "unknown";
}

std::size_t
Topology::attacker_count () const
{
  return static_cast<std::size_t> (
      std::count_if (sensors.begin (), sensors.end (),
                     [] (const NodeState &n) { return n.is_attacker (); }));
}

std::size_t
attacker_count_for (double ratio, std::size_t node_count)
{
  if (ratio <= 0.0 || node_count == 0)
    {
      return 0;
    }
  const double raw = ratio * static_cast<double> (node_count);
  const auto count = static_cast<std::size_t> (std::ceil (raw - 1e-9));
  return std::min (count, node_count);
}

DutyCycleSchedule
make_schedule (const SimConfig &config)
{
  DutyCycleSchedule s;
  s.slot_length = config.slot_length_s ();
  s.slots_per_cycle = config.duty_cycle_slots;
  s.awake_slots = config.awake_slots;
  s.current_sleep_time = config.awake_window_s ();
  return s;
}

Topology
build_topology (const SimConfig &config)
{
  validate (config);
  Rng rng (derive_seed (config.rng_seed, Stream::Topology));
  const DutyCycleSchedule schedule = make_schedule (config);

  Topology topo;
  topo.sensors.reserve (config.node_count);
  for (NodeId i = 0; i < config.node_count; ++i)
    {
      NodeState n;
      n.id = i;
      n.position.x = rng.uniform (0.0, config.field_width_m);
      n.position.y = rng.uniform (0.0, config.field_height_m);
      n.role = Role::Member;
      n.energy = EnergyAccount::bounded (config.initial_energy_j);
      n.schedule = schedule;
      topo.sensors.push_back (std::move (n));
    }

  // Partial Fisher-Yates picks the attacker set.
  const std::size_t attackers = attacker_count_for (config.misbehaving_ratio, config.node_count);
  std::vector<NodeId> order (config.node_count);
  std::iota (order.begin (), order.end (), NodeId{0});
  for (std::size_t i = 0; i < attackers; ++i)
    {
      const std::size_t j = i + static_cast<std::size_t> (rng.below (order.size () - i));
      std::swap (order[i], order[j]);
      topo.sensors[order[i]].role = Role::Attacker;
    }

  NodeState &bs = topo.base_station;
  bs.id = config.node_count;
  bs.position = config.sink_position ();
  bs.role = Role::BaseStation;
  bs.energy = EnergyAccount::unbounded ();
  bs.schedule = schedule;
  return topo;
}

} // namespace asda
