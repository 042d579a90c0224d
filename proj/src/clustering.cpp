#include "asda/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace asda {

double
distance_to (const Position &a, const Position &b)
{
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt (dx * dx + dy * dy);
}

double
node_score (double residual_energy, double dist_to_sink)
{
  return residual_energy * dist_to_sink;
}

double
node_score (double residual_energy, double dist_to_sink, ScoreRule rule)
{
  if (rule == ScoreRule::EnergyOverDistance)
    {
      return residual_energy / (1.0 + dist_to_sink);
    }
  return node_score (residual_energy, dist_to_sink);
}

double
energy_rate (double energy_j, double elapsed_s)
{
  if (!(elapsed_s > 0.0))
    {
      throw std::domain_error ("energy_rate: elapsed time must be positive");
    }
  return energy_j / elapsed_s;
}

double
consumed (double rate_w, double elapsed_s)
{
  return rate_w * elapsed_s;
}

bool
ClusterAssignment::is_head (NodeId id) const
{
  return std::binary_search (heads.begin (), heads.end (), id);
}

std::optional<NodeId>
ClusterAssignment::head_of (NodeId id) const
{
  auto it = member_of.find (id);
  if (it == member_of.end ())
    {
      return std::nullopt;
    }
  return it->second;
}

std::vector<NodeId>
ClusterAssignment::members_of (NodeId head) const
{
  std::vector<NodeId> out;
  for (const auto &[member, h] : member_of)
    {
      if (h == head)
        {
          out.push_back (member);
        }
    }
  return out;
}

ClusterAssignment
elect_cluster_heads (std::span<const ElectionCandidate> candidates, const Position &sink,
                     double range, ScoreRule rule, std::uint64_t round)
{
  ClusterAssignment out;
  out.round = round;
  const std::size_t n = candidates.size ();
  if (n < kMinNodesForClustering)
    {
      for (const auto &c : candidates)
        {
          out.direct_to_sink.push_back (c.id);
        }
      std::sort (out.direct_to_sink.begin (), out.direct_to_sink.end ());
      return out;
    }

  std::vector<double> score (n);
  for (std::size_t i = 0; i < n; ++i)
    {
      score[i] = node_score (candidates[i].residual_energy,
                             distance_to (candidates[i].position, sink), rule);
    }

  const double range2 = range * range;
  auto in_range = [&] (std::size_t i, std::size_t j) {
    const double dx = candidates[i].position.x - candidates[j].position.x;
    const double dy = candidates[i].position.y - candidates[j].position.y;
    return dx * dx + dy * dy <= range2;
  };
  auto beats = [&] (std::size_t i, std::size_t j) {
    if (score[i] != score[j])
      {
        return score[i] > score[j];
      }
    return candidates[i].id < candidates[j].id;
  };

  std::vector<bool> head (n, false);
  for (std::size_t i = 0; i < n; ++i)
    {
      bool wins = true;
      for (std::size_t j = 0; j < n && wins; ++j)
        {
          if (j != i && in_range (i, j) && !beats (i, j))
            {
              wins = false;
            }
        }
      head[i] = wins;
      if (wins)
        {
          out.heads.push_back (candidates[i].id);
        }
    }
  std::sort (out.heads.begin (), out.heads.end ());

  for (std::size_t i = 0; i < n; ++i)
    {
      if (head[i])
        {
          continue;
        }
      std::optional<std::size_t> best;
      double best_d = std::numeric_limits<double>::infinity ();
      for (std::size_t j = 0; j < n; ++j)
        {
          if (!head[j] || !in_range (i, j))
            {
              continue;
            }
          const double d = distance_to (candidates[i].position, candidates[j].position);
          if (d < best_d || (d == best_d && candidates[j].id < candidates[*best].id))
            {
              best = j;
              best_d = d;
            }
        }
      if (best)
        {
          out.member_of.emplace (candidates[i].id, candidates[*best].id);
        }
      else
        {
          out.direct_to_sink.push_back (candidates[i].id);
        }
    }
  std::sort (out.direct_to_sink.begin (), out.direct_to_sink.end ());
  return out;
}

ClusterAssignment
elect_cluster_heads (std::span<const NodeState> nodes, const Position &sink, double range,
                     ScoreRule rule, std::uint64_t round)
{
  std::vector<ElectionCandidate> candidates;
  candidates.reserve (nodes.size ());
  for (const auto &n : nodes)
    {
      if (n.alive () && !n.is_base_station ())
        {
          candidates.push_back ({n.id, n.position, n.energy.residual ()});
        }
    }
  return elect_cluster_heads (std::span<const ElectionCandidate> (candidates), sink, range, rule,
                              round);
}

} // namespace asda
