#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "asda/defense.hpp"
#include "asda/energy.hpp"

namespace asda {

class MetricError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Counters folded from one run (or `replications` runs summed together).
/// Per-node vectors are indexed by sensor id; the base station is excluded.
struct RunMetrics
{
  std::vector<std::uint64_t> sent;     // Y_i: readings node i generated
  std::vector<std::uint64_t> received; // X_i: readings of node i that reached the sink
  std::uint32_t packet_size_bytes = 512;
  double start_time = 0.0; // S_T
  double stop_time = 0.0;  // S_p
  std::vector<double> head_lifetimes; // LCH_i in order of first election
  bool clustered = false;
  std::optional<double> all_dead_at;
  std::vector<double> initial_energy;
  std::vector<double> residual_energy;
  std::vector<EnergyLedger> ledgers;
  ConfusionMatrix confusion;
  std::uint32_t replications = 1;

  std::uint64_t total_sent () const;
  std::uint64_t total_received () const;
};

struct DetectionMetrics
{
  double dr = 0.0;
  double tpr = 0.0;
  double tnr = 0.0;
  double fpr = 0.0;
  double fnr = 0.0;
};

/// (1/n) * sum(X_i * P_s) / (S_p - S_T) * 8 / 1000. Throws MetricError on a
/// zero-length run.
double throughput_kbps (const RunMetrics &metrics);

/// (1/n) * sum(X_i) / sum(Y_i) * 100. Throws MetricError("no traffic") when
/// nothing was sent.
double pdr_percent (const RunMetrics &metrics);

/// Sum of head lifetimes. An unclustered run falls back to the time until
/// the last node died (or the run end if some node survived).
double network_lifetime (const RunMetrics &metrics);

/// 100 * sum(residual) / sum(initial); an empty network reads 100.
double residual_energy_percent (const RunMetrics &metrics);

/// DR = TPR = tp/(tp+fn), TNR = tn/(tn+fp), FPR = fp/(fp+tn),
/// FNR = fn/(fn+tp), as percents. With no attackers DR = TPR = 100 and
/// FNR = 0; with no benign nodes TNR = 100 and FPR = 0.
DetectionMetrics detection_metrics (const ConfusionMatrix &cm);

} // namespace asda
