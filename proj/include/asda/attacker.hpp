#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "asda/config.hpp"
#include "asda/mac.hpp"
#include "asda/random.hpp"

namespace asda {

struct AttackerProfile
{
  AttackKind kind = AttackKind::SynReplay;
  double interval_s = 0.04;
  std::vector<NodeId> targets;    // in-range victims (RTS flood)
  double forged_sleep_time = 1.0; // sleep offset advertised by forged SYNs
};

/// Tick times first, first + interval, ... strictly before `until`.
std::vector<double> attack_schedule (double first, double interval_s, double until);

class Attacker
{
public:
  Attacker (NodeId id, AttackerProfile profile, FrameSizes sizes);

  NodeId id () const { return id_; }
  const AttackerProfile &profile () const { return profile_; }

  /// Keeps frames whose size marks them as SYNs (with or without a token);
  /// returns whether the frame was stored. The latest capture wins.
  bool capture_syn (const Frame &overheard);
  const std::optional<Frame> &captured () const { return captured_; }

  /// Frames for one attack tick. `ids` lists the identities a forged SYN may
  /// claim; the attacker's own id is skipped.
  std::vector<Frame> emit (double now, std::uint64_t cycle, Rng &rng,
                           std::span<const NodeId> ids) const;

private:
  NodeId id_;
  AttackerProfile profile_;
  FrameSizes sizes_;
  std::optional<Frame> captured_;
};

} // namespace asda
