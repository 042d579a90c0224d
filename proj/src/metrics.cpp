#include "asda/metrics.hpp"

#include <numeric>

namespace asda {

std::uint64_t
RunMetrics::total_sent () const
{
  return std::accumulate (sent.begin (), sent.end (), std::uint64_t{0});
}

std::uint64_t
RunMetrics::total_received () const
{
  return std::accumulate (received.begin (), received.end (), std::uint64_t{0});
}

namespace {

double
replication_count (const RunMetrics &m)
{
  if (m.replications == 0)
    {
      throw MetricError ("replication count must be positive");
    }
  return static_cast<double> (m.replications);
}

} // namespace

double
throughput_kbps (const RunMetrics &m)
{
  const double duration = m.stop_time - m.start_time;
  if (!(duration > 0.0))
    {
      throw MetricError ("zero-duration run");
    }
  const double bytes
      = static_cast<double> (m.total_received ()) * static_cast<double> (m.packet_size_bytes);
  return bytes / duration * 8.0 / 1000.0 / replication_count (m);
}

double
pdr_percent (const RunMetrics &m)
{
  const std::uint64_t y = m.total_sent ();
  if (y == 0)
    {
      throw MetricError ("no traffic");
    }
  return static_cast<double> (m.total_received ()) / static_cast<double> (y) * 100.0
         / replication_count (m);
}

double
network_lifetime (const RunMetrics &m)
{
  if (m.clustered)
    {
      return std::accumulate (m.head_lifetimes.begin (), m.head_lifetimes.end (), 0.0);
    }
  const double end = m.all_dead_at ? *m.all_dead_at : m.stop_time;
  return end - m.start_time;
}

double
residual_energy_percent (const RunMetrics &m)
{
  const double initial = std::accumulate (m.initial_energy.begin (), m.initial_energy.end (), 0.0);
  if (!(initial > 0.0))
    {
      return 100.0;
    }
  const double residual
      = std::accumulate (m.residual_energy.begin (), m.residual_energy.end (), 0.0);
  return 100.0 * residual / initial;
}

DetectionMetrics
detection_metrics (const ConfusionMatrix &cm)
{
  auto pct = [] (std::uint64_t num, std::uint64_t den, double empty) {
    return den == 0 ? empty : 100.0 * static_cast<double> (num) / static_cast<double> (den);
  };
  DetectionMetrics d;
  d.tpr = pct (cm.tp, cm.tp + cm.fn, 100.0);
  d.dr = d.tpr;
  d.fnr = pct (cm.fn, cm.tp + cm.fn, 0.0);
  d.tnr = pct (cm.tn, cm.tn + cm.fp, 100.0);
  d.fpr = pct (cm.fp, cm.tn + cm.fp, 0.0);
  return d;
}

} // namespace asda
