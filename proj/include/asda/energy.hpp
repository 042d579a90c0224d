#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

#include "asda/config.hpp"

namespace asda {

enum class EnergyCategory : std::uint8_t
{
  Tx,
  Rx,
  Idle,
  Sleep,
  Sensing,
  Aggregation,
};

inline constexpr std::size_t kEnergyCategoryCount = 6;

std::string_view to_string (EnergyCategory category);

enum class RadioMode : std::uint8_t
{
  Sleep,
  Idle,
  Receive,
  Transmit,
};

std::string_view to_string (RadioMode mode);

/// Distance at which the amplifier model switches from d^2 to d^4 loss.
double crossover_distance (const RadioParams &radio);

/// Energy to transmit `bits` over `distance` meters. The multipath branch is
/// taken when distance >= crossover_distance(radio).
double tx_energy (std::uint64_t bits, double distance, const RadioParams &radio);
double rx_energy (std::uint64_t bits, const RadioParams &radio);

/// Cost of fusing `member_count` packets of `bits_per_packet` at a head.
double aggregation_energy (std::uint64_t member_count, std::uint64_t bits_per_packet,
                           const RadioParams &radio);

double mode_power (RadioMode mode, const PowerProfile &power);
double mode_drain (RadioMode mode, double duration, const PowerProfile &power);
EnergyCategory drain_category (RadioMode mode);

class EnergyLedger
{
public:
  void add (EnergyCategory category, double joules);
  double operator[] (EnergyCategory category) const
  {
    return entries_[static_cast<std::size_t> (category)];
  }
  double total () const;

private:
  std::array<double, kEnergyCategoryCount> entries_{};
};

/// Battery plus the ledger of everything drawn from it. An unbounded
/// account (the base station) records spending but never depletes.
class EnergyAccount
{
public:
  EnergyAccount () = default;
  static EnergyAccount bounded (double initial_joules);
  static EnergyAccount unbounded ();

  /// Debits up to the remaining energy; returns the amount actually applied.
  double debit (EnergyCategory category, double joules);

  double initial () const { return initial_; }
  double residual () const { return residual_; }
  bool is_unbounded () const { return unbounded_; }
  bool depleted () const { return !unbounded_ && residual_ <= 0.0; }
  const EnergyLedger &ledger () const { return ledger_; }

private:
  double initial_ = 0.0;
  double residual_ = 0.0;
  bool unbounded_ = false;
  EnergyLedger ledger_;
};

} // namespace asda
