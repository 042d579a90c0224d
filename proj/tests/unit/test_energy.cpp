#include <cmath>

#include "doctest.h"

#include "asda/energy.hpp"

using namespace asda;

namespace {

// Closed-form first-order radio, written out independently of the library.
double
oracle_tx (double bits, double d, double e_elec, double fs, double mp)
{
  const double d0 = std::sqrt (fs / mp);
  return d < d0 ? bits * (e_elec + fs * d * d) : bits * (e_elec + mp * d * d * d * d);
}

} // namespace

TEST_CASE ("crossover distance")
{
  const RadioParams r;
  CHECK (crossover_distance (r) == doctest::Approx (std::sqrt (20.0 / 0.0015)).epsilon (1e-12));
  CHECK (std::abs (crossover_distance (r) - 115.470) < 1e-3);

  RadioParams same = r;
  same.eps_mp = same.eps_fs;
  CHECK (crossover_distance (same) == doctest::Approx (1.0));

  RadioParams four;
  four.eps_fs = 4.0;
  four.eps_mp = 1.0;
  CHECK (crossover_distance (four) == doctest::Approx (2.0));
}

TEST_CASE ("transmit energy examples")
{
  const RadioParams r;
  CHECK (tx_energy (4096, 50.0, r) == doctest::Approx (614.4e-6).epsilon (1e-12));
  CHECK (tx_energy (4096, 200.0, r) == doctest::Approx (10.24e-3).epsilon (1e-12));
  CHECK (tx_energy (0, 80.0, r) == 0.0);
  CHECK (tx_energy (4096, 50.0, r) == doctest::Approx (4096 * 100e-9 + 4096 * 20e-12 * 2500.0));
}

TEST_CASE ("receive and aggregation energy examples")
{
  const RadioParams r;
  CHECK (rx_energy (4096, r) == doctest::Approx (409.6e-6));
  CHECK (rx_energy (0, r) == 0.0);
  CHECK (rx_energy (1, r) == doctest::Approx (100e-9));
  CHECK (aggregation_energy (0, 4096, r) == 0.0);
  CHECK (aggregation_energy (10, 4096, r) == doctest::Approx (204.8e-6));
  CHECK (aggregation_energy (1, 1, r) == doctest::Approx (5e-9));
}

TEST_CASE ("mode drain examples")
{
  const PowerProfile p;
  CHECK (mode_drain (RadioMode::Idle, 1.0, p) == doctest::Approx (41e-3));
  CHECK (mode_drain (RadioMode::Sleep, 1.0, p) == doctest::Approx (25e-6));
  for (RadioMode m : {RadioMode::Sleep, RadioMode::Idle, RadioMode::Receive, RadioMode::Transmit})
    {
      CHECK (mode_drain (m, 0.0, p) == 0.0);
    }
  CHECK (drain_category (RadioMode::Sleep) == EnergyCategory::Sleep);
  CHECK (drain_category (RadioMode::Idle) == EnergyCategory::Idle);
  CHECK (mode_drain (RadioMode::Sleep, 0.9, p) < mode_drain (RadioMode::Idle, 0.9, p));
}

TEST_CASE ("transmit energy against the closed form over a grid")
{
  const RadioParams r;
  for (std::uint64_t bits : {1ull, 80ull, 240ull, 4096ull, 100000ull})
    {
      for (double d = 0.0; d <= 250.0; d += 0.5)
        {
          const double expected = oracle_tx (static_cast<double> (bits), d, r.e_elec, r.eps_fs,
                                             r.eps_mp);
          CHECK (tx_energy (bits, d, r) == doctest::Approx (expected).epsilon (1e-12));
          CHECK (rx_energy (bits, r) <= tx_energy (bits, d, r));
        }
    }
}

TEST_CASE ("regime boundary uses the multipath branch at d0")
{
  const RadioParams r;
  const double d0 = crossover_distance (r);
  const double bits = 4096.0;
  const double below = std::nextafter (d0, 0.0);
  CHECK (tx_energy (4096, below, r)
         == doctest::Approx (bits * (r.e_elec + r.eps_fs * below * below)).epsilon (1e-14));
  const double d4 = d0 * d0 * d0 * d0;
  CHECK (tx_energy (4096, d0, r) == doctest::Approx (bits * (r.e_elec + r.eps_mp * d4)).epsilon (1e-14));
  // both branches agree at d0, so the model is continuous there
  CHECK (tx_energy (4096, below, r) == doctest::Approx (tx_energy (4096, d0, r)).epsilon (1e-9));
}

TEST_CASE ("transmit energy is monotone within each regime")
{
  const RadioParams r;
  const double d0 = crossover_distance (r);
  double prev = tx_energy (4096, 0.0, r);
  for (double d = 0.25; d < d0; d += 0.25)
    {
      const double e = tx_energy (4096, d, r);
      CHECK (e >= prev);
      prev = e;
    }
  prev = tx_energy (4096, d0, r);
  for (double d = d0 + 0.25; d < 400.0; d += 0.25)
    {
      const double e = tx_energy (4096, d, r);
      CHECK (e >= prev);
      prev = e;
    }
  for (std::uint64_t b = 1; b < 50; ++b)
    {
      CHECK (tx_energy (b + 1, 60.0, r) > tx_energy (b, 60.0, r));
    }
}

TEST_CASE ("bounded account clamps and records")
{
  EnergyAccount a = EnergyAccount::bounded (1.0);
  CHECK (a.debit (EnergyCategory::Tx, 0.25) == 0.25);
  CHECK (a.debit (EnergyCategory::Idle, 0.5) == 0.5);
  CHECK (a.debit (EnergyCategory::Rx, 0.0) == 0.0);
  CHECK (a.debit (EnergyCategory::Rx, -1.0) == 0.0);
  CHECK (a.residual () == doctest::Approx (0.25));
  CHECK (a.debit (EnergyCategory::Sleep, 1.0) == doctest::Approx (0.25));
  CHECK (a.depleted ());
  CHECK (a.residual () == 0.0);
  CHECK (a.debit (EnergyCategory::Sleep, 1.0) == 0.0);
  CHECK (a.ledger ().total () == doctest::Approx (1.0));
  CHECK (a.ledger ()[EnergyCategory::Tx] == 0.25);
  CHECK (a.ledger ()[EnergyCategory::Sleep] == doctest::Approx (0.25));
}

TEST_CASE ("unbounded account never depletes")
{
  EnergyAccount bs = EnergyAccount::unbounded ();
  bs.debit (EnergyCategory::Tx, 1e9);
  CHECK_FALSE (bs.depleted ());
  CHECK (bs.ledger ()[EnergyCategory::Tx] == 1e9);
}
