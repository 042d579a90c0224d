#include "asda/config.hpp"

#include <cmath>

namespace asda {

namespace {

void
require_positive (double value, const char *name)
{
  if (!(value > 0.0) || !std::isfinite (value))
    {
      throw ConfigError (std::string (name) + ": must be a positive finite value");
    }
}

void
require_nonzero (std::uint64_t value, const char *name)
{
  if (value == 0)
    {
      throw ConfigError (std::string (name) + ": must be positive");
    }
}

} // namespace

Position
SimConfig::sink_position () const
{
  if (base_station_position)
    {
      return *base_station_position;
    }
  return Position{field_width_m / 2.0, field_height_m / 2.0};
}

void
validate (const SimConfig &c)
{
  require_positive (c.field_width_m, "field_width_m");
  require_positive (c.field_height_m, "field_height_m");
  // node_count = 0 and sim_time_s = 0 are accepted as degenerate runs.
  if (!(c.sim_time_s >= 0.0) || !std::isfinite (c.sim_time_s))
    {
      throw ConfigError ("sim_time_s: must be a non-negative finite value");
    }
  require_nonzero (c.duty_cycle_slots, "duty_cycle_slots");
  if (c.awake_slots == 0 || c.awake_slots > c.duty_cycle_slots)
    {
      throw ConfigError ("awake_slots: must lie in [1, duty_cycle_slots]");
    }
  require_positive (c.cycle_period_s, "cycle_period_s");
  require_positive (c.transmission_range_m, "transmission_range_m");
  require_nonzero (c.packet_size_bytes, "packet_size_bytes");
  require_nonzero (c.control_frame_bytes, "control_frame_bytes");
  require_nonzero (c.syn_frame_bytes, "syn_frame_bytes");
  require_positive (c.initial_energy_j, "initial_energy_j");
  if (!(c.misbehaving_ratio >= 0.0 && c.misbehaving_ratio <= 1.0))
    {
      throw ConfigError ("misbehaving_ratio: must lie in [0, 1]");
    }
  require_positive (c.attack_interval_s, "attack_interval_s");
  require_positive (c.link_delay_s, "link_delay_s");
  if (c.link_delay_s >= c.slot_length_s ())
    {
      throw ConfigError ("link_delay_s: must be shorter than one slot");
    }
  if (c.base_station_position)
    {
      if (!std::isfinite (c.base_station_position->x) || !std::isfinite (c.base_station_position->y))
        {
          throw ConfigError ("base_station_position: must be finite");
        }
    }
  if (c.rsa_prime_bits < 16)
    {
      throw ConfigError ("rsa_prime_bits: must be at least 16");
    }
  if (c.rsa_public_exponent < 3 || c.rsa_public_exponent % 2 == 0)
    {
      throw ConfigError ("rsa_public_exponent: must be an odd integer >= 3");
    }

  require_positive (c.radio.e_elec, "e_elec");
  require_positive (c.radio.eps_fs, "eps_fs");
  require_positive (c.radio.eps_mp, "eps_mp");
  require_positive (c.radio.eda, "eda");
  require_positive (c.radio.sensing_energy_j, "sensing_energy_j");

  require_positive (c.power.idle_w, "idle_w");
  require_positive (c.power.rx_w, "rx_w");
  require_positive (c.power.tx_w, "tx_w");
  require_positive (c.power.sleep_w, "sleep_w");
  if (!(c.power.sleep_w < c.power.idle_w))
    {
      throw ConfigError ("sleep_w: must be below idle_w");
    }

  require_positive (c.defense.syn_rate_threshold, "syn_rate_threshold");
  if (!(c.defense.auth_mode_exit_factor > 0.0 && c.defense.auth_mode_exit_factor <= 1.0))
    {
      throw ConfigError ("auth_mode_exit_factor: must lie in (0, 1]");
    }
  require_nonzero (c.defense.fs_rounds, "fs_rounds");
  if (c.defense.token_bytes == 0 || c.defense.token_bytes > 16)
    {
      throw ConfigError ("token_bytes: must lie in [1, 16]");
    }
}

std::string_view
to_string (AttackKind kind)
{
  switch (kind)
    {
    case AttackKind::SynReplay:
      return "syn_replay";
    case AttackKind::RtsFlood:
      return "rts_flood";
    case AttackKind::ForgedIdSyn:
      return "forged_id_syn";
    }
  return "unknown";
}

std::optional<AttackKind>
parse_attack_kind (std::string_view text)
{
  for (AttackKind k : {AttackKind::SynReplay, AttackKind::RtsFlood, AttackKind::ForgedIdSyn})
    {
      if (to_string (k) == text)
        {
          return k;
        }
    }
  return std::nullopt;
}

std::string_view
to_string (ScoreRule rule)
{
  return rule == ScoreRule::EnergyTimesDistance ? "product" : "inverse";
}

std::optional<ScoreRule>
parse_score_rule (std::string_view text)
{
  if (text == "product")
    {
      return ScoreRule::EnergyTimesDistance;
    }
  if (text == "inverse")
    {
      return ScoreRule::EnergyOverDistance;
    }
  return std::nullopt;
}

std::string_view
to_string (SleepUpdateRule rule)
{
  return rule == SleepUpdateRule::Average ? "average" : "literal";
}

std::optional<SleepUpdateRule>
parse_sleep_update_rule (std::string_view text)
{
  if (text == "average")
    {
      return SleepUpdateRule::Average;
    }
  if (text == "literal")
    {
      return SleepUpdateRule::Literal;
    }
  return std::nullopt;
}

} // namespace asda
