#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "asda/types.hpp"

namespace asda {

class ConfigError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// First-order radio constants. Units: joules per bit (e_elec, eda),
/// J/bit/m^2 (eps_fs), J/bit/m^4 (eps_mp), joules per sensing action.
struct RadioParams
{
  double e_elec = 100e-9;
  double eps_fs = 20e-12;
  double eps_mp = 0.0015e-12;
  double eda = 5e-9;
  double sensing_energy_j = 5e-8;
};

/// Per-mode radio power draw in watts.
struct PowerProfile
{
  double idle_w = 41e-3;
  double rx_w = 45e-3;
  double tx_w = 41e-3;
  double sleep_w = 25e-6;
};

struct DefenseParams
{
  // SYN frames per second per member; twice the nominal one-per-cycle rate.
  double syn_rate_threshold = 2.0;
  double auth_mode_exit_factor = 0.75;
  std::uint32_t fs_rounds = 20;
  std::uint32_t token_bytes = 8;
};

enum class AttackKind : std::uint8_t
{
  SynReplay,
  RtsFlood,
  ForgedIdSyn,
};

enum class ScoreRule : std::uint8_t
{
  EnergyTimesDistance, // r_i = e_i * d(i, sink)
  EnergyOverDistance,  // e_i / (1 + d(i, sink))
};

enum class SleepUpdateRule : std::uint8_t
{
  Average, // (old + received) / 2
  Literal, // old + received / 2
};

struct SimConfig
{
  double field_width_m = 80.0;
  double field_height_m = 80.0;
  std::uint32_t node_count = 300;
  double sim_time_s = 70.0;
  std::uint32_t duty_cycle_slots = 20;
  std::uint32_t awake_slots = 2;
  double cycle_period_s = 1.0;
  double transmission_range_m = 150.0;
  std::uint32_t packet_size_bytes = 512;
  std::uint32_t control_frame_bytes = 30;
  std::uint32_t syn_frame_bytes = 10;
  double initial_energy_j = 35.0;
  double misbehaving_ratio = 0.0;
  double attack_interval_s = 0.04;
  AttackKind attack_kind = AttackKind::SynReplay;
  bool defense_enabled = true;
  std::uint64_t rng_seed = 1;
  double link_delay_s = 1e-3;
  std::optional<Position> base_station_position; // field center when unset
  ScoreRule election_score = ScoreRule::EnergyTimesDistance;
  SleepUpdateRule sleep_update = SleepUpdateRule::Average;
  std::uint32_t rsa_prime_bits = 512;
  std::uint64_t rsa_public_exponent = 65537;
  RadioParams radio;
  PowerProfile power;
  DefenseParams defense;

  double slot_length_s () const { return cycle_period_s / duty_cycle_slots; }
  double awake_window_s () const { return slot_length_s () * awake_slots; }
  Position sink_position () const;
};

/// Throws ConfigError naming the offending field.
void validate (const SimConfig &config);

std::string_view to_string (AttackKind kind);
std::optional<AttackKind> parse_attack_kind (std::string_view text);
std::string_view to_string (ScoreRule rule);
std::optional<ScoreRule> parse_score_rule (std::string_view text);
std::string_view to_string (SleepUpdateRule rule);
std::optional<SleepUpdateRule> parse_sleep_update_rule (std::string_view text);

} // namespace asda
