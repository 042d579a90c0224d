#include "asda/attacker.hpp"

#include <stdexcept>

namespace asda {

std::vector<double>
attack_schedule (double first, double interval_s, double until)
{
  if (!(interval_s > 0.0))
    {
      throw std::invalid_argument ("attack_schedule: interval must be positive");
    }
  std::vector<double> ticks;
  for (std::uint64_t k = 0;; ++k)
    {
      const double t = first + static_cast<double> (k) * interval_s;
      if (!(t < until))
        {
          break;
        }
      ticks.push_back (t);
    }
  return ticks;
}

Attacker::Attacker (NodeId id, AttackerProfile profile, FrameSizes sizes)
    : id_ (id), profile_ (std::move (profile)), sizes_ (sizes)
{
  if (!(profile_.interval_s > 0.0))
    {
      throw std::invalid_argument ("Attacker: interval_s must be positive");
    }
}

bool
Attacker::capture_syn (const Frame &overheard)
{
  if (overheard.size_bytes != sizes_.syn && overheard.size_bytes != sizes_.syn_with_token ())
    {
      return false;
    }
  captured_ = overheard;
  return true;
}

std::vector<Frame>
Attacker::emit (double now, std::uint64_t cycle, Rng &rng, std::span<const NodeId> ids) const
{
  std::vector<Frame> out;
  switch (profile_.kind)
    {
    case AttackKind::SynReplay:
      if (captured_)
        {
          Frame f = *captured_;
          f.origin = id_;
          f.sent_at = now;
          out.push_back (f);
        }
      break;
    case AttackKind::ForgedIdSyn:
      {
        std::vector<NodeId> others;
        others.reserve (ids.size ());
        for (NodeId n : ids)
          {
            if (n != id_)
              {
                others.push_back (n);
              }
          }
        if (others.empty ())
          {
            break;
          }
        Frame f;
        f.kind = FrameKind::Syn;
        f.size_bytes = sizes_.syn;
        f.src = others[rng.below (others.size ())];
        f.origin = id_;
        f.sleep_time_field = profile_.forged_sleep_time;
        f.cycle = cycle;
        f.sent_at = now;
        out.push_back (f);
        break;
      }
    case AttackKind::RtsFlood:
      for (NodeId victim : profile_.targets)
        {
          Frame f;
          f.kind = FrameKind::Rts;
          f.size_bytes = sizes_.control;
          f.src = id_;
          f.dst = victim;
          f.origin = id_;
          f.cycle = cycle;
          f.sent_at = now;
          out.push_back (f);
        }
      break;
    }
  return out;
}

} // namespace asda
