#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "asda/config.hpp"
#include "asda/energy.hpp"
#include "asda/node.hpp"
#include "asda/trace.hpp"

namespace asda {

enum class FrameKind : std::uint8_t
{
  Data,
  Rts,
  Cts,
  Ack,
  Syn,
  SynA,
  NoSynA,
  KeyExchange,
};

std::string_view to_string (FrameKind kind);

using AuthToken = std::array<std::uint8_t, 16>; // first token_bytes are significant

/// A MAC frame. `src` is the identity the frame claims; `origin` is the radio
/// that physically emitted it (equal to src for honest traffic).
struct Frame
{
  FrameKind kind = FrameKind::Data;
  std::uint32_t size_bytes = 0;
  NodeId src = 0;
  NodeId dst = kBroadcast;
  NodeId origin = 0;
  double sleep_time_field = 0.0; // SYN only; follows the sender id on the wire
  std::optional<AuthToken> auth_token;
  std::uint64_t cycle = 0;
  double sent_at = 0.0;
  NodeId subject = kBroadcast; // SYN-A: id being isolated, if any

  std::uint64_t bits () const { return std::uint64_t{size_bytes} * 8; }
  bool broadcast () const { return dst == kBroadcast; }
};

struct FrameSizes
{
  std::uint32_t data = 512;
  std::uint32_t control = 30; // RTS, CTS, ACK, SYN-A, NO-SYN-A
  std::uint32_t syn = 10;
  std::uint32_t token = 8;

  static FrameSizes from (const SimConfig &config);
  std::uint32_t syn_with_token () const { return syn + token; }
};

/// Next sleep offset after hearing a SYN. Average: (old + received) / 2.
/// Literal: old + received / 2.
double update_sleep_time (double old_sleep_time, double received_sleep_time,
                          SleepUpdateRule rule = SleepUpdateRule::Average);

/// Everything the energy-charging helpers need besides the node itself.
struct EnergyContext
{
  const RadioParams *radio = nullptr;
  const PowerProfile *power = nullptr;
  TraceLog *trace = nullptr;
};

/// Charges mode power from node.mode_since up to now. A node whose battery
/// runs out part way dies at the exact instant it reached zero.
void settle (NodeState &node, double now, const EnergyContext &ctx);

/// Debits a one-off cost (frame, sensing, aggregation). Returns whether the
/// node is still alive afterwards.
bool charge (NodeState &node, EnergyCategory category, double joules, double now,
             const EnergyContext &ctx);

void set_mode (NodeState &node, RadioMode mode, double now, const EnergyContext &ctx);

inline bool
is_awake (const NodeState &node)
{
  return node.radio_mode != RadioMode::Sleep;
}

inline void
note_activity (NodeState &node, double now)
{
  node.last_activity = now;
}

bool transmit (NodeState &node, std::uint64_t bits, double distance, double now,
               const EnergyContext &ctx);
bool receive (NodeState &node, std::uint64_t bits, double now, const EnergyContext &ctx);

/// RTS -> CTS -> DATA -> ACK between two alive nodes. Each leg debits tx at
/// the sender and rx at the receiver; a sleeping receiver is woken by the RTS.
/// A dead (or dying) receiver aborts the handshake after the RTS.
/// data_frames_sent increments at src when DATA is emitted and
/// data_frames_received at dst when the ACK completes. A zero payload runs
/// the control legs only.
bool exchange_data (NodeState &src, NodeState &dst, std::uint32_t payload_bytes, double now,
                    const FrameSizes &sizes, const EnergyContext &ctx);

struct SleepDecision
{
  bool slept = false;
  std::optional<double> recheck_at; // held awake: try again at this time
};

/// Sleep attempt at the node's scheduled sleep point. The node stays awake
/// while it has heard accepted traffic within the last slot, and is told when
/// to look again; otherwise it switches to sleep.
SleepDecision advance_cycle (NodeState &node, double now, const EnergyContext &ctx);

/// Cycle boundary: a sleeping node turns its radio back on.
void wake (NodeState &node, double now, const EnergyContext &ctx);

} // namespace asda
