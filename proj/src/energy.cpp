#include "asda/energy.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace asda {

std::string_view
to_string (EnergyCategory category)
{
  switch (category)
    {
    case EnergyCategory::Tx:
      return "tx";
    case EnergyCategory::Rx:
      return "rx";
    case EnergyCategory::Idle:
      return "idle";
    case EnergyCategory::Sleep:
      return "sleep";
    case EnergyCategory::Sensing:
      return "sensing";
    case EnergyCategory::Aggregation:
      return "aggregation";
    }
  return "unknown";
}

std::string_view
to_string (RadioMode mode)
{
  switch (mode)
    {
    case RadioMode::Sleep:
      return "sleep";
    case RadioMode::Idle:
      return "idle";
    case RadioMode::Receive:
      return "receive";
    case RadioMode::Transmit:
      return "transmit";
    }
  return "unknown";
}

double
crossover_distance (const RadioParams &radio)
{
  return std::sqrt (radio.eps_fs / radio.eps_mp);
}

double
tx_energy (std::uint64_t bits, double distance, const RadioParams &radio)
{
  const double b = static_cast<double> (bits);
  if (distance < crossover_distance (radio))
    {
      return b * radio.e_elec + b * radio.eps_fs * distance * distance;
    }
  const double d2 = distance * distance;
  return b * radio.e_elec + b * radio.eps_mp * d2 * d2;
}

double
rx_energy (std::uint64_t bits, const RadioParams &radio)
{
  return static_cast<double> (bits) * radio.e_elec;
}

double
aggregation_energy (std::uint64_t member_count, std::uint64_t bits_per_packet,
                    const RadioParams &radio)
{
  return static_cast<double> (member_count) * static_cast<double> (bits_per_packet) * radio.eda;
}

double
mode_power (RadioMode mode, const PowerProfile &power)
{
  switch (mode)
    {
    case RadioMode::Sleep:
      return power.sleep_w;
    case RadioMode::Idle:
      return power.idle_w;
    case RadioMode::Receive:
      return power.rx_w;
    case RadioMode::Transmit:
      return power.tx_w;
    }
  return 0.0;
}

double
mode_drain (RadioMode mode, double duration, const PowerProfile &power)
{
  return mode_power (mode, power) * duration;
}

EnergyCategory
drain_category (RadioMode mode)
{
  switch (mode)
    {
    case RadioMode::Sleep:
      return EnergyCategory::Sleep;
    case RadioMode::Receive:
      return EnergyCategory::Rx;
    case RadioMode::Transmit:
      return EnergyCategory::Tx;
    case RadioMode::Idle:
      break;
    }
  return EnergyCategory::Idle;
}

void
EnergyLedger::add (EnergyCategory category, double joules)
{
  entries_[static_cast<std::size_t> (category)] += joules;
}

double
EnergyLedger::total () const
{
  return std::accumulate (entries_.begin (), entries_.end (), 0.0);
}

EnergyAccount
EnergyAccount::bounded (double initial_joules)
{
  EnergyAccount a;
  a.initial_ = initial_joules;
  a.residual_ = initial_joules;
  return a;
}

EnergyAccount
EnergyAccount::unbounded ()
{
  EnergyAccount a;
  a.initial_ = std::numeric_limits<double>::infinity ();
  a.residual_ = std::numeric_limits<double>::infinity ();
  a.unbounded_ = true;
  return a;
}

double
EnergyAccount::debit (EnergyCategory category, double joules)
{
  if (!(joules > 0.0))
    {
      return 0.0;
    }
  if (unbounded_)
    {
      ledger_.add (category, joules);
      return joules;
    }
  const double applied = joules < residual_ ? joules : residual_;
  if (applied <= 0.0)
    {
      return 0.0;
    }
  if (applied == residual_)
    {
      residual_ = 0.0;
    }
  else
    {
      residual_ -= applied;
    }
  ledger_.add (category, applied);
  return applied;
}

} // namespace asda
