#pragma once

#include <cstdint>
#include <vector>

#include "asda/energy.hpp"
#include "asda/types.hpp"

namespace asda {

enum class TraceKind : std::uint8_t
{
  Debit,             // amount joules applied to node under category
  ReadingOriginated, // node generated one DATA reading
  ReadingDelivered,  // a reading originated by node reached the sink
  HeadElected,       // node serves as cluster head this round
  Death,             // node energy reached zero at time
  Rejected,          // node isolated by the defense
  RunEnd,
};

struct TraceRecord
{
  TraceKind kind = TraceKind::RunEnd;
  double time = 0.0;
  NodeId node = 0;
  EnergyCategory category = EnergyCategory::Idle;
  double amount = 0.0;
};

/// Append-only event trace; a disabled log ignores every call.
class TraceLog
{
public:
  explicit TraceLog (bool enabled = false) : enabled_ (enabled) {}

  bool enabled () const { return enabled_; }
  const std::vector<TraceRecord> &records () const { return records_; }

  void
  record (TraceKind kind, double time, NodeId node,
          EnergyCategory category = EnergyCategory::Idle, double amount = 0.0)
  {
    if (enabled_)
      {
        records_.push_back ({kind, time, node, category, amount});
      }
  }

private:
  bool enabled_ = false;
  std::vector<TraceRecord> records_;
};

} // namespace asda
