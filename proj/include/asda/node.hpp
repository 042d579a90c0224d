#pragma once

#include <cstdint>
#include <limits>
#include <optional>

#include "asda/crypto/bigint.hpp"
#include "asda/crypto/symmetric.hpp"
#include "asda/energy.hpp"
#include "asda/types.hpp"

namespace asda {

enum class Role : std::uint8_t
{
  Member,
  ClusterHead,
  BaseStation,
  Attacker,
};

std::string_view to_string (Role role);

/// Sleep/wake timing of one node. current_sleep_time is the offset from the
/// cycle start at which the node may turn its radio off.
struct DutyCycleSchedule
{
  double slot_length = 0.05;
  std::uint32_t slots_per_cycle = 20;
  std::uint32_t awake_slots = 2;
  double current_sleep_time = 0.1;

  double cycle_length () const { return slot_length * slots_per_cycle; }
  double awake_window () const { return slot_length * awake_slots; }
};

struct KeyMaterial
{
  crypto::Key128 session_key{};
  crypto::BigInt identity_secret; // P; zero when the node holds none
  bool registered = false;
};

struct NodeState
{
  NodeId id = 0;
  Position position;
  Role role = Role::Member;
  EnergyAccount energy;
  RadioMode radio_mode = RadioMode::Idle;
  double mode_since = 0.0;
  double last_activity = -std::numeric_limits<double>::infinity ();
  std::optional<double> death_time;
  DutyCycleSchedule schedule;
  KeyMaterial keys;
  // link-level DATA counters maintained by the handshake
  std::uint64_t data_frames_sent = 0;
  std::uint64_t data_frames_received = 0;

  bool alive () const { return !death_time.has_value (); }
  bool is_attacker () const { return role == Role::Attacker; }
  bool is_base_station () const { return role == Role::BaseStation; }
};

} // namespace asda
