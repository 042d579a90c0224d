#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "asda/config.hpp"
#include "asda/defense.hpp"
#include "asda/metrics.hpp"
#include "asda/node.hpp"
#include "asda/trace.hpp"

namespace asda {

struct ScriptedNode
{
  Position position;
  bool attacker = false;
};

struct RunOptions
{
  bool record_trace = false;
  // replaces the random deployment; node_count is taken from its size
  std::optional<std::vector<ScriptedNode>> layout;
  // attackers keep their role but never transmit attack frames
  bool suppress_attacks = false;
};

struct RunResult
{
  RunMetrics metrics;
  std::vector<NodeState> sensors; // final state, indexed by id
  NodeState base_station;
  VerdictBook verdicts;
  std::vector<EscalationRecord> escalations;
  std::vector<double> attack_ticks; // emission times of every attack tick
  TraceLog trace;
  std::uint64_t events_processed = 0;
  std::uint64_t cycles = 0;
};

/// Runs one replication: per cycle, election among alive sensors, SYN
/// exchange, member DATA toward the heads, aggregation to the sink, and
/// duty-cycled sleep; attackers flood from the start; the defense (when
/// enabled) screens SYNs at the heads and isolates offenders through the
/// base station. Ends at sim_time_s or when every sensor is dead.
RunResult run_detailed (const SimConfig &config, const RunOptions &options = {});

RunMetrics run (const SimConfig &config);

} // namespace asda
