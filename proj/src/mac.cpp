#include "asda/mac.hpp"

#include <stdexcept>

#include "asda/clustering.hpp"

namespace asda {

std::string_view
to_string (FrameKind kind)
{
  switch (kind)
    {
    case FrameKind::Data:
      return "DATA";
    case FrameKind::Rts:
      return "RTS";
    case FrameKind::Cts:
      return "CTS";
    case FrameKind::Ack:
      return "ACK";
    case FrameKind::Syn:
      return "SYN";
    case FrameKind::SynA:
      return "SYN_A";
    case FrameKind::NoSynA:
      return "NO_SYN_A";
    case FrameKind::KeyExchange:
      return "KEYX";
    }
  return "UNKNOWN";
}

FrameSizes
FrameSizes::from (const SimConfig &config)
{
  FrameSizes s;
  s.data = config.packet_size_bytes;
  s.control = config.control_frame_bytes;
  s.syn = config.syn_frame_bytes;
  s.token = config.defense.token_bytes;
  return s;
}

double
update_sleep_time (double old_sleep_time, double received_sleep_time, SleepUpdateRule rule)
{
  if (old_sleep_time < 0.0 || received_sleep_time < 0.0)
    {
      throw std::invalid_argument ("update_sleep_time: sleep times must be non-negative");
    }
  if (rule == SleepUpdateRule::Literal)
    {
      return old_sleep_time + received_sleep_time / 2.0;
    }
  return (old_sleep_time + received_sleep_time) / 2.0;
}

void
settle (NodeState &node, double now, const EnergyContext &ctx)
{
  if (!node.alive () || !(now > node.mode_since))
    {
      return;
    }
  if (node.energy.is_unbounded ())
    {
      node.mode_since = now;
      return;
    }
  const double power = mode_power (node.radio_mode, *ctx.power);
  const double before = node.energy.residual ();
  const double applied
      = node.energy.debit (drain_category (node.radio_mode), power * (now - node.mode_since));
  if (ctx.trace)
    {
      ctx.trace->record (TraceKind::Debit, now, node.id, drain_category (node.radio_mode), applied);
    }
  if (node.energy.depleted ())
    {
      const double t_dead = node.mode_since + before / power;
      node.death_time = t_dead < now ? t_dead : now;
      if (ctx.trace)
        {
          ctx.trace->record (TraceKind::Death, *node.death_time, node.id);
        }
    }
  node.mode_since = now;
}

bool
charge (NodeState &node, EnergyCategory category, double joules, double now,
        const EnergyContext &ctx)
{
  if (!node.alive ())
    {
      return false;
    }
  if (!node.energy.is_unbounded ())
    {
      // Settle first whenever this debit could exhaust the battery, so the
      // death instant accounts for mode drain accrued so far.
      const double pending = now > node.mode_since
                                 ? mode_power (node.radio_mode, *ctx.power) * (now - node.mode_since)
                                 : 0.0;
      if (joules + pending >= node.energy.residual ())
        {
          settle (node, now, ctx);
          if (!node.alive ())
            {
              return false;
            }
        }
    }
  const double applied = node.energy.debit (category, joules);
  if (ctx.trace && !node.energy.is_unbounded ())
    {
      ctx.trace->record (TraceKind::Debit, now, node.id, category, applied);
    }
  if (node.energy.depleted ())
    {
      node.death_time = now;
      if (ctx.trace)
        {
          ctx.trace->record (TraceKind::Death, now, node.id);
        }
      return false;
    }
  return true;
}

void
set_mode (NodeState &node, RadioMode mode, double now, const EnergyContext &ctx)
{
  settle (node, now, ctx);
  if (node.alive ())
    {
      node.radio_mode = mode;
      if (now > node.mode_since)
        {
          node.mode_since = now;
        }
    }
}

bool
transmit (NodeState &node, std::uint64_t bits, double distance, double now,
          const EnergyContext &ctx)
{
  return charge (node, EnergyCategory::Tx, tx_energy (bits, distance, *ctx.radio), now, ctx);
}

bool
receive (NodeState &node, std::uint64_t bits, double now, const EnergyContext &ctx)
{
  return charge (node, EnergyCategory::Rx, rx_energy (bits, *ctx.radio), now, ctx);
}

bool
exchange_data (NodeState &src, NodeState &dst, std::uint32_t payload_bytes, double now,
               const FrameSizes &sizes, const EnergyContext &ctx)
{
  settle (src, now, ctx);
  if (!src.alive ())
    {
      return false;
    }
  if (!is_awake (src))
    {
      set_mode (src, RadioMode::Idle, now, ctx);
    }
  const double d = distance_to (src.position, dst.position);
  const std::uint64_t ctrl = std::uint64_t{sizes.control} * 8;
  const std::uint64_t data = std::uint64_t{payload_bytes} * 8;

  note_activity (src, now);
  if (!transmit (src, ctrl, d, now, ctx)) // RTS
    {
      return false;
    }
  settle (dst, now, ctx);
  if (!dst.alive ())
    {
      return false;
    }
  if (!is_awake (dst))
    {
      set_mode (dst, RadioMode::Idle, now, ctx);
    }
  note_activity (dst, now);
  if (!receive (dst, ctrl, now, ctx) || !transmit (dst, ctrl, d, now, ctx)) // CTS
    {
      return false;
    }
  if (!receive (src, ctrl, now, ctx))
    {
      return false;
    }
  if (payload_bytes > 0)
    {
      if (!transmit (src, data, d, now, ctx))
        {
          return false;
        }
      ++src.data_frames_sent;
      if (!receive (dst, data, now, ctx))
        {
          return false;
        }
    }
  if (!transmit (dst, ctrl, d, now, ctx) || !receive (src, ctrl, now, ctx)) // ACK
    {
      return false;
    }
  if (payload_bytes > 0)
    {
      ++dst.data_frames_received;
    }
  return true;
}

SleepDecision
advance_cycle (NodeState &node, double now, const EnergyContext &ctx)
{
  SleepDecision out;
  settle (node, now, ctx);
  if (!node.alive ())
    {
      return out;
    }
  if (!is_awake (node))
    {
      out.slept = true;
      return out;
    }
  const double quiet_at = node.last_activity + node.schedule.slot_length;
  if (now < quiet_at)
    {
      out.recheck_at = quiet_at;
      return out;
    }
  set_mode (node, RadioMode::Sleep, now, ctx);
  out.slept = node.alive ();
  return out;
}

void
wake (NodeState &node, double now, const EnergyContext &ctx)
{
  if (node.alive () && !is_awake (node))
    {
      set_mode (node, RadioMode::Idle, now, ctx);
    }
}

} // namespace asda
