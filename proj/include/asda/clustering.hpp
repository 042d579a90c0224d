#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "asda/config.hpp"
#include "asda/node.hpp"
#include "asda/types.hpp"

namespace asda {

inline constexpr std::size_t kMinNodesForClustering = 5;

double distance_to (const Position &a, const Position &b);

/// r_i = e_i * d(i, sink).
double node_score (double residual_energy, double dist_to_sink);
double node_score (double residual_energy, double dist_to_sink, ScoreRule rule);

/// Average drain rate Q = e / t; throws std::domain_error when elapsed <= 0.
double energy_rate (double energy_j, double elapsed_s);
/// e = Q * t.
double consumed (double rate_w, double elapsed_s);

struct ElectionCandidate
{
  NodeId id = 0;
  Position position;
  double residual_energy = 0.0;
};

struct ClusterAssignment
{
  std::vector<NodeId> heads;              // ascending
  std::map<NodeId, NodeId> member_of;     // non-head -> head
  std::vector<NodeId> direct_to_sink;     // no head in range, or unclustered
  std::uint64_t round = 0;

  bool clustered () const { return !heads.empty (); }
  bool is_head (NodeId id) const;
  std::optional<NodeId> head_of (NodeId id) const;
  std::vector<NodeId> members_of (NodeId head) const;
};

/// Neighborhood-argmax election. Below kMinNodesForClustering candidates no
/// heads are chosen and every node reports to the sink directly. Otherwise a
/// candidate becomes head when its score beats every candidate within
/// `range` (equal scores go to the lower id), and each remaining candidate
/// joins the nearest in-range head (ties to the lower id).
ClusterAssignment elect_cluster_heads (std::span<const ElectionCandidate> candidates,
                                       const Position &sink, double range,
                                       ScoreRule rule = ScoreRule::EnergyTimesDistance,
                                       std::uint64_t round = 0);

/// Convenience overload: alive nodes of `nodes` are the candidates.
ClusterAssignment elect_cluster_heads (std::span<const NodeState> nodes, const Position &sink,
                                       double range,
                                       ScoreRule rule = ScoreRule::EnergyTimesDistance,
                                       std::uint64_t round = 0);

} // namespace asda
