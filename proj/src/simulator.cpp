#include "asda/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <set>

#include "asda/attacker.hpp"
#include "asda/clustering.hpp"
#include "asda/crypto/identification.hpp"
#include "asda/crypto/rsa.hpp"
#include "asda/event_queue.hpp"
#include "asda/mac.hpp"
#include "asda/topology.hpp"

namespace asda {

namespace {

// Offsets inside the awake window, as fractions of its length. Benign
// traffic finishes a full slot before the nominal sleep point.
constexpr double kSynFrom = 0.0;
constexpr double kSynTo = 0.2;
constexpr double kDataFrom = 0.25;
constexpr double kDataTo = 0.45;
constexpr double kForwardAt = 0.48;

// KEYX: member id (4) + AES-GCM sealed 128-bit key (12 + 16 + 16).
constexpr std::uint32_t kKeyFrameBytes = 48;

enum class EventKind : std::uint8_t
{
  CycleStart,
  SynEmit,
  DataEmit,
  HeadForward,
  SleepCheck,
  Deliver,
  AttackTick,
};

struct Action
{
  EventKind kind = EventKind::CycleStart;
  NodeId node = 0;
  std::uint64_t cycle = 0;
  Frame frame;
};

class Simulation
{
public:
  Simulation (const SimConfig &config, const RunOptions &options);
  RunResult run ();

private:
  NodeState &node (NodeId id) { return id < n_ ? sensors_[id] : bs_; }
  double now () const { return queue_.now (); }
  bool defense () const { return config_.defense_enabled; }
  ClusterAuthState &auth_state (NodeId head);

  void deploy_keys ();
  void on_cycle_start (std::uint64_t cycle);
  void elect (std::uint64_t cycle);
  void authenticate_head (NodeId head);
  void distribute_keys (NodeId head);
  void on_syn_emit (NodeId id, std::uint64_t cycle);
  void on_data_emit (NodeId id);
  void on_head_forward (NodeId head);
  void on_sleep_check (NodeId id, std::uint64_t cycle);
  void on_attack_tick (NodeId id);
  void on_deliver (const Frame &frame);

  void broadcast (NodeId sender, Frame frame);
  void hear (NodeId receiver, const Frame &frame);
  void hear_syn (NodeId receiver, const Frame &frame);
  void hear_syn_a (NodeId receiver, const Frame &frame);
  void hear_no_syn_a (NodeId receiver, const Frame &frame);
  void hear_rts (NodeId victim, const Frame &frame);
  void member_syn (NodeId receiver, const Frame &frame);
  void accept_syn (NodeState &receiver, const Frame &frame);
  void offense (NodeId evaluator, NodeId origin, NodeId claimed, bool repeat_rejects);
  void reject (NodeId origin, NodeId evaluator);
  bool send_direct (NodeState &from, NodeState &to, std::uint64_t bytes);
  void charge_identification (NodeId prover, NodeId evaluator, std::uint32_t rounds);
  void deliver_reading (NodeId origin);
  bool same_cluster (NodeId a, NodeId b) const;
  Frame control_frame (FrameKind kind, NodeId sender) const;

  SimConfig config_;
  RunOptions options_;
  NodeId n_ = 0;
  std::vector<NodeState> sensors_;
  NodeState bs_;
  TraceLog trace_;
  EnergyContext ctx_;
  FrameSizes sizes_;
  double period_ = 1.0;
  double window_ = 0.1;
  EventQueue<Action> queue_;
  Rng traffic_rng_;
  Rng attack_rng_;
  Rng crypto_rng_;

  std::vector<std::vector<NodeId>> neighbors_;
  std::vector<double> reach_;
  std::vector<NodeId> ids_;

  ClusterAssignment assignment_;
  std::vector<NodeId> head_of_;    // kBroadcast when none
  std::vector<char> is_head_;
  std::vector<char> member_auth_;  // member heard SYN-A from its head
  std::vector<char> forwarded_;    // member already relayed SYN-A this episode
  std::vector<double> member_auth_at_;
  std::vector<std::unique_ptr<RateMonitor>> syn_monitors_;
  std::vector<std::vector<std::int64_t>> token_seen_; // last token cycle per claimed id
  std::set<NodeId> prev_heads_;
  std::vector<std::vector<NodeId>> buffers_;
  std::uint64_t cycle_ = 0;
  double cycle_start_ = 0.0;
  bool finished_ = false;

  crypto::RsaKeyPair bs_keys_;
  std::size_t modulus_bytes_ = 0;
  IdentityRegistry registry_;
  std::vector<crypto::Key128> bs_session_keys_;
  std::map<NodeId, ClusterAuthState> auth_;
  std::map<NodeId, RateMonitor> rts_monitors_;
  VerdictBook verdicts_;
  std::vector<EscalationRecord> escalations_;

  std::vector<std::unique_ptr<Attacker>> attackers_;
  std::vector<double> attack_ticks_;

  std::vector<std::uint64_t> sent_;
  std::vector<std::uint64_t> received_;
  std::vector<std::optional<double>> first_elected_;
  std::vector<NodeId> head_order_;
  bool clustered_ = false;
  std::uint64_t events_ = 0;
  std::uint64_t cycles_ = 0;
};

Simulation::Simulation (const SimConfig &config, const RunOptions &options)
    : config_ (config), options_ (options), trace_ (options.record_trace),
      traffic_rng_ (derive_seed (config.rng_seed, Stream::Traffic)),
      attack_rng_ (derive_seed (config.rng_seed, Stream::Attack)),
      crypto_rng_ (derive_seed (config.rng_seed, Stream::Crypto))
{
  if (options_.layout)
    {
      config_.node_count = static_cast<std::uint32_t> (options_.layout->size ());
    }
  validate (config_);

  Topology topo;
  if (options_.layout)
    {
      const DutyCycleSchedule schedule = make_schedule (config_);
      for (std::size_t i = 0; i < options_.layout->size (); ++i)
        {
          const ScriptedNode &s = (*options_.layout)[i];
          NodeState n;
          n.id = static_cast<NodeId> (i);
          n.position = s.position;
          n.role = s.attacker ? Role::Attacker : Role::Member;
          n.energy = EnergyAccount::bounded (config_.initial_energy_j);
          n.schedule = schedule;
          topo.sensors.push_back (std::move (n));
        }
      topo.base_station.id = config_.node_count;
      topo.base_station.position = config_.sink_position ();
      topo.base_station.role = Role::BaseStation;
      topo.base_station.energy = EnergyAccount::unbounded ();
      topo.base_station.schedule = schedule;
    }
  else
    {
      topo = build_topology (config_);
    }
  sensors_ = std::move (topo.sensors);
  bs_ = std::move (topo.base_station);
  n_ = static_cast<NodeId> (sensors_.size ());

  ctx_.radio = &config_.radio;
  ctx_.power = &config_.power;
  ctx_.trace = trace_.enabled () ? &trace_ : nullptr;
  sizes_ = FrameSizes::from (config_);
  period_ = config_.cycle_period_s;
  window_ = config_.awake_window_s ();

  neighbors_.resize (n_);
  reach_.assign (n_, 0.0);
  for (NodeId i = 0; i < n_; ++i)
    {
      ids_.push_back (i);
      for (NodeId j = 0; j < n_; ++j)
        {
          if (i == j)
            {
              continue;
            }
          const double d = distance_to (sensors_[i].position, sensors_[j].position);
          if (d <= config_.transmission_range_m)
            {
              neighbors_[i].push_back (j);
              reach_[i] = std::max (reach_[i], d);
            }
        }
    }

  head_of_.assign (n_, kBroadcast);
  is_head_.assign (n_, 0);
  member_auth_.assign (n_, 0);
  forwarded_.assign (n_, 0);
  member_auth_at_.assign (n_, 0.0);
  syn_monitors_.resize (n_);
  token_seen_.resize (n_);
  buffers_.resize (n_);
  sent_.assign (n_, 0);
  received_.assign (n_, 0);
  first_elected_.resize (n_);
  attackers_.resize (n_);
  bs_session_keys_.resize (n_);

  for (NodeId i = 0; i < n_; ++i)
    {
      if (!sensors_[i].is_attacker ())
        {
          continue;
        }
      AttackerProfile profile;
      profile.kind = config_.attack_kind;
      profile.interval_s = config_.attack_interval_s;
      profile.forged_sleep_time = period_;
      for (NodeId v : neighbors_[i])
        {
          if (!sensors_[v].is_attacker ())
            {
              profile.targets.push_back (v);
            }
        }
      attackers_[i] = std::make_unique<Attacker> (i, std::move (profile), sizes_);
    }
}

ClusterAuthState &
Simulation::auth_state (NodeId head)
{
  auto it = auth_.find (head);
  if (it == auth_.end ())
    {
      it = auth_.emplace (head, ClusterAuthState (head, config_.defense, period_,
                                                  config_.link_delay_s))
               .first;
    }
  return it->second;
}

Frame
Simulation::control_frame (FrameKind kind, NodeId sender) const
{
  Frame f;
  f.kind = kind;
  f.size_bytes = sizes_.control;
  f.src = sender;
  f.origin = sender;
  f.cycle = cycle_;
  f.sent_at = queue_.now ();
  return f;
}

bool
Simulation::send_direct (NodeState &from, NodeState &to, std::uint64_t bytes)
{
  const std::uint64_t bits = bytes * 8;
  if (!transmit (from, bits, distance_to (from.position, to.position), now (), ctx_))
    {
      return false;
    }
  if (!to.alive ())
    {
      return false;
    }
  wake (to, now (), ctx_);
  return receive (to, bits, now (), ctx_);
}

void
Simulation::deploy_keys ()
{
  bs_keys_ = crypto::rsa_generate (config_.rsa_prime_bits,
                                   crypto::BigInt (config_.rsa_public_exponent), crypto_rng_);
  modulus_bytes_ = crypto::byte_length (bs_keys_.modulus);
  const crypto::BigInt two (2);
  for (NodeId i = 0; i < n_; ++i)
    {
      NodeState &s = sensors_[i];
      const crypto::BigInt secret = crypto::random_between (two, bs_keys_.modulus, crypto_rng_);
      const auto material = crypto::make_identification (secret, bs_keys_.modulus);
      s.keys.identity_secret = secret;
      registry_.enroll (i, {material.modulus, material.square});

      // node -> base station, every leg paid through the radio model
      InterlockChannel channel = [&] (InterlockLeg leg, std::vector<std::uint8_t> &payload) {
        if (leg == InterlockLeg::Acknowledge)
          {
            return send_direct (bs_, s, payload.size ());
          }
        return send_direct (s, bs_, payload.size ());
      };
      const InterlockResult r = interlock_exchange (i, bs_.id, bs_keys_, crypto_rng_, channel);
      if (r.outcome == InterlockOutcome::Complete)
        {
          s.keys.session_key = r.session.session_key;
          s.keys.registered = true;
          bs_session_keys_[i] = r.responder_key;
        }
    }
}

RunResult
Simulation::run ()
{
  if (n_ > 0 && config_.sim_time_s > 0.0)
    {
      if (defense ())
        {
          deploy_keys ();
        }
      queue_.schedule (0.0, Action{EventKind::CycleStart, 0, 0, {}});
      if (!options_.suppress_attacks)
        {
          for (NodeId i = 0; i < n_; ++i)
            {
              if (attackers_[i])
                {
                  const double first = attack_rng_.uniform (0.0, config_.attack_interval_s);
                  queue_.schedule (first, Action{EventKind::AttackTick, i, 0, {}});
                }
            }
        }
    }

  while (!finished_ && !queue_.empty () && queue_.top ().time < config_.sim_time_s)
    {
      const auto ev = queue_.pop ();
      ++events_;
      const Action &a = ev.payload;
      switch (a.kind)
        {
        case EventKind::CycleStart:
          on_cycle_start (a.cycle);
          break;
        case EventKind::SynEmit:
          on_syn_emit (a.node, a.cycle);
          break;
        case EventKind::DataEmit:
          on_data_emit (a.node);
          break;
        case EventKind::HeadForward:
          on_head_forward (a.node);
          break;
        case EventKind::SleepCheck:
          on_sleep_check (a.node, a.cycle);
          break;
        case EventKind::Deliver:
          on_deliver (a.frame);
          break;
        case EventKind::AttackTick:
          on_attack_tick (a.node);
          break;
        }
    }

  double stop = config_.sim_time_s;
  std::optional<double> all_dead_at;
  if (n_ > 0)
    {
      double last = 0.0;
      bool any_alive = false;
      for (auto &s : sensors_)
        {
          if (!finished_)
            {
              settle (s, stop, ctx_);
            }
          if (s.alive ())
            {
              any_alive = true;
            }
          else
            {
              last = std::max (last, *s.death_time);
            }
        }
      if (!any_alive)
        {
          all_dead_at = last;
          stop = std::min (stop, last);
        }
    }
  trace_.record (TraceKind::RunEnd, stop, 0);

  RunResult out;
  RunMetrics &m = out.metrics;
  m.sent = sent_;
  m.received = received_;
  m.packet_size_bytes = config_.packet_size_bytes;
  m.start_time = 0.0;
  m.stop_time = stop;
  for (NodeId h : head_order_)
    {
      const NodeState &s = sensors_[h];
      const double end = s.death_time ? std::min (*s.death_time, stop) : stop;
      m.head_lifetimes.push_back (end - *first_elected_[h]);
    }
  m.clustered = clustered_;
  m.all_dead_at = all_dead_at;
  std::vector<bool> truth;
  for (const auto &s : sensors_)
    {
      m.initial_energy.push_back (s.energy.initial ());
      m.residual_energy.push_back (s.energy.residual ());
      m.ledgers.push_back (s.energy.ledger ());
      truth.push_back (s.is_attacker ());
    }
  m.confusion = final_classification (verdicts_, truth);
  m.replications = 1;

  out.sensors = std::move (sensors_);
  out.base_station = std::move (bs_);
  out.verdicts = verdicts_;
  out.escalations = escalations_;
  out.attack_ticks = attack_ticks_;
  out.trace = std::move (trace_);
  out.events_processed = events_;
  out.cycles = cycles_;
  return out;
}

void
Simulation::on_cycle_start (std::uint64_t cycle)
{
  const double t0 = now ();
  cycle_ = cycle;
  cycle_start_ = t0;
  ++cycles_;

  bool any_alive = false;
  for (auto &s : sensors_)
    {
      settle (s, t0, ctx_);
      any_alive = any_alive || s.alive ();
    }
  if (!any_alive)
    {
      finished_ = true;
      return;
    }
  for (auto &s : sensors_)
    {
      if (!s.is_attacker ())
        {
          wake (s, t0, ctx_);
        }
    }
  for (auto &b : buffers_)
    {
      b.clear ();
    }

  elect (cycle);

  if (defense ())
    {
      for (NodeId h : assignment_.heads)
        {
          if (sensors_[h].is_attacker () || !sensors_[h].alive ())
            {
              continue;
            }
          auto it = auth_.find (h);
          if (it == auth_.end () || it->second.mode () != AuthMode::AuthRequired)
            {
              continue;
            }
          if (it->second.maybe_exit_auth_mode (t0))
            {
              broadcast (h, control_frame (FrameKind::NoSynA, h));
            }
          else
            {
              broadcast (h, control_frame (FrameKind::SynA, h));
            }
        }
    }

  for (NodeId i = 0; i < n_; ++i)
    {
      const double syn_at = t0 + traffic_rng_.uniform (kSynFrom * window_, kSynTo * window_);
      const double data_at = t0 + traffic_rng_.uniform (kDataFrom * window_, kDataTo * window_);
      const NodeState &s = sensors_[i];
      if (!s.alive () || s.is_attacker ())
        {
          continue;
        }
      queue_.schedule (syn_at, Action{EventKind::SynEmit, i, cycle, {}});
      queue_.schedule (data_at, Action{EventKind::DataEmit, i, cycle, {}});
      if (is_head_[i])
        {
          queue_.schedule (t0 + kForwardAt * window_, Action{EventKind::HeadForward, i, cycle, {}});
        }
      const double sleep_at = t0 + std::min (s.schedule.current_sleep_time, period_);
      queue_.schedule (sleep_at, Action{EventKind::SleepCheck, i, cycle, {}});
    }

  const double next = t0 + period_;
  if (next < config_.sim_time_s)
    {
      queue_.schedule (next, Action{EventKind::CycleStart, 0, cycle + 1, {}});
    }
}

void
Simulation::elect (std::uint64_t cycle)
{
  std::vector<ElectionCandidate> candidates;
  candidates.reserve (n_);
  for (const auto &s : sensors_)
    {
      if (!s.alive () || (defense () && verdicts_.rejected (s.id)))
        {
          continue;
        }
      candidates.push_back ({s.id, s.position, s.energy.residual ()});
    }
  assignment_ = elect_cluster_heads (candidates, config_.sink_position (),
                                     config_.transmission_range_m, config_.election_score, cycle);
  clustered_ = clustered_ || assignment_.clustered ();

  std::fill (is_head_.begin (), is_head_.end (), 0);
  std::vector<NodeId> new_head_of (n_, kBroadcast);
  for (const auto &[member, head] : assignment_.member_of)
    {
      new_head_of[member] = head;
    }
  for (NodeId h : assignment_.heads)
    {
      is_head_[h] = 1;
      if (!first_elected_[h])
        {
          first_elected_[h] = now ();
          head_order_.push_back (h);
        }
      trace_.record (TraceKind::HeadElected, now (), h);
    }
  for (NodeId i = 0; i < n_; ++i)
    {
      NodeState &s = sensors_[i];
      if (!s.is_attacker ())
        {
          s.role = is_head_[i] ? Role::ClusterHead : Role::Member;
        }
      if (new_head_of[i] != head_of_[i])
        {
          member_auth_[i] = 0;
          forwarded_[i] = 0;
        }
    }
  head_of_ = std::move (new_head_of);

  if (defense ())
    {
      for (NodeId h : assignment_.heads)
        {
          if (prev_heads_.count (h) == 0)
            {
              authenticate_head (h);
            }
          if (!sensors_[h].is_attacker ())
            {
              distribute_keys (h);
            }
        }
    }
  prev_heads_ = std::set<NodeId> (assignment_.heads.begin (), assignment_.heads.end ());
}

void
Simulation::charge_identification (NodeId prover, NodeId evaluator, std::uint32_t rounds)
{
  NodeState &p = node (prover);
  NodeState &v = node (evaluator);
  if (!v.is_base_station ())
    {
      // evaluator asks the base station for (G, F)
      send_direct (v, bs_, sizes_.control);
      send_direct (bs_, v, 2 * modulus_bytes_);
    }
  for (std::uint32_t r = 0; r < rounds; ++r)
    {
      if (!send_direct (p, v, modulus_bytes_) || !send_direct (v, p, sizes_.control)
          || !send_direct (p, v, modulus_bytes_))
        {
          return;
        }
    }
}

void
Simulation::authenticate_head (NodeId head)
{
  NodeState &h = sensors_[head];
  if (!h.alive () || !h.keys.registered)
    {
      return;
    }
  crypto::HonestProver prover (h.keys.identity_secret, bs_keys_.modulus, Rng (crypto_rng_ ()));
  const NetworkAuthResult r
      = network_authenticate (prover, head, registry_, config_.defense.fs_rounds, crypto_rng_);
  charge_identification (head, bs_.id, r.rounds_run);
  if (!r.accepted)
    {
      reject (head, bs_.id);
    }
}

void
Simulation::distribute_keys (NodeId head)
{
  ClusterAuthState &st = auth_state (head);
  NodeState &h = sensors_[head];
  for (NodeId m : assignment_.members_of (head))
    {
      if (!sensors_[m].keys.registered || st.has_key (m))
        {
          continue;
        }
      if (!h.alive () || !send_direct (bs_, h, kKeyFrameBytes))
        {
          return;
        }
      st.install_key (m, bs_session_keys_[m]);
    }
}

void
Simulation::broadcast (NodeId sender, Frame frame)
{
  NodeState &s = node (sender);
  if (!s.alive ())
    {
      return;
    }
  wake (s, now (), ctx_);
  note_activity (s, now ());
  const double reach = sender < n_ ? reach_[sender] : config_.transmission_range_m;
  if (!transmit (s, frame.bits (), reach, now (), ctx_))
    {
      return;
    }
  frame.sent_at = now ();
  queue_.schedule (now () + config_.link_delay_s, Action{EventKind::Deliver, sender, cycle_, frame});
}

void
Simulation::on_syn_emit (NodeId id, std::uint64_t cycle)
{
  NodeState &s = sensors_[id];
  if (!s.alive ())
    {
      return;
    }
  Frame f;
  f.kind = FrameKind::Syn;
  f.size_bytes = sizes_.syn;
  f.src = id;
  f.origin = id;
  f.sleep_time_field = s.schedule.current_sleep_time;
  f.cycle = cycle;
  const bool in_auth = is_head_[id] ? (auth_.count (id) != 0
                                       && auth_.at (id).mode () == AuthMode::AuthRequired)
                                    : member_auth_[id] != 0;
  if (defense () && in_auth && s.keys.registered)
    {
      f.auth_token = make_token (s.keys.session_key, id, cycle);
      f.size_bytes = sizes_.syn_with_token ();
    }
  broadcast (id, f);
}

void
Simulation::deliver_reading (NodeId origin)
{
  ++received_[origin];
  trace_.record (TraceKind::ReadingDelivered, now (), origin);
}

void
Simulation::on_data_emit (NodeId id)
{
  NodeState &s = sensors_[id];
  if (!s.alive () || s.is_attacker ())
    {
      return;
    }
  if (!charge (s, EnergyCategory::Sensing, config_.radio.sensing_energy_j, now (), ctx_))
    {
      return;
    }
  ++sent_[id];
  trace_.record (TraceKind::ReadingOriginated, now (), id);

  if (is_head_[id])
    {
      buffers_[id].push_back (id);
      return;
    }
  const NodeId h = head_of_[id];
  if (h != kBroadcast && !(defense () && verdicts_.rejected (h)))
    {
      NodeState &head = sensors_[h];
      if (exchange_data (s, head, config_.packet_size_bytes, now (), sizes_, ctx_)
          && !head.is_attacker ())
        {
          buffers_[h].push_back (id);
        }
      return;
    }
  if (exchange_data (s, bs_, config_.packet_size_bytes, now (), sizes_, ctx_))
    {
      deliver_reading (id);
    }
}

void
Simulation::on_head_forward (NodeId head)
{
  auto &buf = buffers_[head];
  NodeState &h = sensors_[head];
  if (buf.empty () || !h.alive () || h.is_attacker ())
    {
      buf.clear ();
      return;
    }
  const std::uint64_t bits = std::uint64_t{config_.packet_size_bytes} * 8;
  if (charge (h, EnergyCategory::Aggregation, aggregation_energy (buf.size (), bits, config_.radio),
              now (), ctx_)
      && exchange_data (h, bs_, config_.packet_size_bytes, now (), sizes_, ctx_))
    {
      for (NodeId o : buf)
        {
          deliver_reading (o);
        }
    }
  buf.clear ();
}

void
Simulation::on_sleep_check (NodeId id, std::uint64_t cycle)
{
  if (cycle != cycle_)
    {
      return;
    }
  NodeState &s = sensors_[id];
  if (!s.alive () || s.is_attacker ())
    {
      return;
    }
  const SleepDecision d = advance_cycle (s, now (), ctx_);
  if (d.recheck_at && *d.recheck_at < cycle_start_ + period_)
    {
      queue_.schedule (*d.recheck_at, Action{EventKind::SleepCheck, id, cycle, {}});
    }
}

void
Simulation::on_attack_tick (NodeId id)
{
  NodeState &s = sensors_[id];
  if (!s.alive ())
    {
      return;
    }
  attack_ticks_.push_back (now ());
  const Attacker &a = *attackers_[id];
  const auto frames = a.emit (now (), cycle_, attack_rng_, ids_);
  if (a.profile ().kind == AttackKind::RtsFlood)
    {
      // one RTS per victim; the burst travels as a single delivery event
      bool sent = false;
      for (const Frame &f : frames)
        {
          if (!transmit (s, f.bits (), distance_to (s.position, sensors_[f.dst].position), now (),
                         ctx_))
            {
              break;
            }
          sent = true;
        }
      if (sent && s.alive ())
        {
          Frame burst = frames.front ();
          burst.dst = kBroadcast;
          queue_.schedule (now () + config_.link_delay_s,
                           Action{EventKind::Deliver, id, cycle_, burst});
        }
    }
  else
    {
      for (const Frame &f : frames)
        {
          broadcast (id, f);
        }
    }
  const double next = now () + config_.attack_interval_s;
  if (s.alive () && next < config_.sim_time_s)
    {
      queue_.schedule (next, Action{EventKind::AttackTick, id, 0, {}});
    }
}

void
Simulation::on_deliver (const Frame &frame)
{
  if (frame.kind == FrameKind::Rts)
    {
      for (NodeId v : attackers_[frame.origin]->profile ().targets)
        {
          hear_rts (v, frame);
        }
      return;
    }
  if (frame.origin >= n_)
    {
      return;
    }
  for (NodeId r : neighbors_[frame.origin])
    {
      hear (r, frame);
    }
}

void
Simulation::hear (NodeId receiver, const Frame &frame)
{
  NodeState &r = sensors_[receiver];
  if (!r.alive () || !is_awake (r))
    {
      return;
    }
  if (!receive (r, frame.bits (), now (), ctx_))
    {
      return;
    }
  if (r.is_attacker ())
    {
      attackers_[receiver]->capture_syn (frame);
      return;
    }
  if (defense () && verdicts_.rejected (frame.origin))
    {
      return;
    }
  switch (frame.kind)
    {
    case FrameKind::Syn:
      hear_syn (receiver, frame);
      break;
    case FrameKind::SynA:
      hear_syn_a (receiver, frame);
      break;
    case FrameKind::NoSynA:
      hear_no_syn_a (receiver, frame);
      break;
    default:
      break;
    }
}

bool
Simulation::same_cluster (NodeId a, NodeId b) const
{
  const NodeId ha = is_head_[a] ? a : head_of_[a];
  const NodeId hb = b < n_ ? (is_head_[b] ? b : head_of_[b]) : kBroadcast;
  return ha != kBroadcast && ha == hb;
}

void
Simulation::accept_syn (NodeState &r, const Frame &frame)
{
  note_activity (r, now ());
  const double next
      = update_sleep_time (r.schedule.current_sleep_time, frame.sleep_time_field,
                           config_.sleep_update);
  r.schedule.current_sleep_time = std::clamp (next, 0.0, period_);
}

void
Simulation::hear_syn (NodeId receiver, const Frame &frame)
{
  NodeState &r = sensors_[receiver];
  if (!defense ())
    {
      accept_syn (r, frame);
      return;
    }
  if (is_head_[receiver])
    {
      const SynDecision d = auth_state (receiver).on_syn_received (frame, assignment_, now ());
      switch (d.verdict)
        {
        case SynVerdict::Accept:
          accept_syn (r, frame);
          break;
        case SynVerdict::EscalateAuth:
          escalations_.push_back ({now (), frame.src, d.observed_rate});
          broadcast (receiver, control_frame (FrameKind::SynA, receiver));
          break;
        case SynVerdict::Reject:
          if (d.suspect_origin)
            {
              offense (receiver, frame.origin, frame.src, false);
            }
          break;
        }
      return;
    }
  member_syn (receiver, frame);
}

void
Simulation::member_syn (NodeId receiver, const Frame &frame)
{
  NodeState &r = sensors_[receiver];
  auto &monitor = syn_monitors_[receiver];
  if (!monitor)
    {
      monitor = std::make_unique<RateMonitor> (period_);
    }
  monitor->record (frame.src, now ());
  if (!member_auth_[receiver])
    {
      if (monitor->rate (frame.src, now ()) > config_.defense.syn_rate_threshold)
        {
          // member-initiated escalation; the crossing frame is not applied
          member_auth_[receiver] = 1;
          member_auth_at_[receiver] = now ();
          escalations_.push_back ({now (), frame.src, monitor->rate (frame.src, now ())});
          if (!forwarded_[receiver])
            {
              forwarded_[receiver] = 1;
              broadcast (receiver, control_frame (FrameKind::SynA, receiver));
            }
          return;
        }
    }
  else if (!frame.auth_token)
    {
      if (frame.sent_at >= member_auth_at_[receiver] + config_.link_delay_s)
        {
          offense (receiver, frame.origin, frame.src, false);
        }
      return;
    }
  else
    {
      // Members hold no keys, but a token bound to an old cycle or seen
      // before under the same id is a replay.
      auto &seen = token_seen_[receiver];
      if (seen.empty ())
        {
          seen.assign (n_, -1);
        }
      const bool fresh = frame.cycle == cycle_
                         || (frame.cycle + 1 == cycle_
                             && now () - cycle_start_ <= config_.link_delay_s);
      if (frame.src >= n_ || !fresh || seen[frame.src] == static_cast<std::int64_t> (frame.cycle))
        {
          offense (receiver, frame.origin, frame.src, false);
          return;
        }
      seen[frame.src] = static_cast<std::int64_t> (frame.cycle);
    }
  if (head_of_[receiver] == kBroadcast || same_cluster (receiver, frame.src))
    {
      accept_syn (r, frame);
    }
}

void
Simulation::hear_syn_a (NodeId receiver, const Frame &frame)
{
  if (!defense () || frame.subject != kBroadcast || is_head_[receiver])
    {
      return;
    }
  const NodeId h = head_of_[receiver];
  if (h == kBroadcast || !same_cluster (receiver, frame.src))
    {
      return;
    }
  note_activity (sensors_[receiver], now ());
  if (!member_auth_[receiver])
    {
      member_auth_[receiver] = 1;
      member_auth_at_[receiver] = now ();
    }
  if (frame.src == h && !forwarded_[receiver])
    {
      forwarded_[receiver] = 1;
      broadcast (receiver, control_frame (FrameKind::SynA, receiver));
    }
}

void
Simulation::hear_no_syn_a (NodeId receiver, const Frame &frame)
{
  if (!defense () || is_head_[receiver] || head_of_[receiver] != frame.src)
    {
      return;
    }
  note_activity (sensors_[receiver], now ());
  member_auth_[receiver] = 0;
  forwarded_[receiver] = 0;
}

void
Simulation::hear_rts (NodeId victim, const Frame &frame)
{
  NodeState &v = sensors_[victim];
  if (!v.alive () || !is_awake (v))
    {
      return;
    }
  const std::uint64_t bits = std::uint64_t{sizes_.control} * 8;
  if (!receive (v, bits, now (), ctx_))
    {
      return;
    }
  if (defense ())
    {
      if (verdicts_.rejected (frame.origin))
        {
          return;
        }
      auto it = rts_monitors_.try_emplace (victim, period_).first;
      it->second.record (frame.src, now ());
      if (it->second.rate (frame.src, now ()) > config_.defense.syn_rate_threshold)
        {
          offense (victim, frame.origin, frame.src, true);
          return;
        }
    }
  note_activity (v, now ());
  NodeState &a = sensors_[frame.origin];
  if (transmit (v, bits, distance_to (v.position, a.position), now (), ctx_) && a.alive ())
    {
      receive (a, bits, now (), ctx_);
    }
}

void
Simulation::offense (NodeId evaluator, NodeId origin, NodeId claimed, bool repeat_rejects)
{
  if (verdicts_.rejected (origin))
    {
      return;
    }
  if (verdicts_.suspected (origin))
    {
      // a node that already proved its identity is only isolated for
      // repeating an offense it commits under that identity
      if (repeat_rejects)
        {
          reject (origin, evaluator);
        }
      return;
    }
  std::unique_ptr<crypto::Prover> prover;
  const NodeState &o = node (origin);
  const crypto::PublicIdentity *id = registry_.find (claimed);
  Rng prover_rng (crypto_rng_ ());
  if (origin == claimed && o.keys.registered)
    {
      prover = std::make_unique<crypto::HonestProver> (o.keys.identity_secret, bs_keys_.modulus,
                                                       std::move (prover_rng));
    }
  else if (id != nullptr)
    {
      prover = std::make_unique<crypto::GuessingProver> (id->modulus, id->square,
                                                         std::move (prover_rng));
    }
  else
    {
      prover = std::make_unique<crypto::RandomResponder> (bs_keys_.modulus, std::move (prover_rng));
    }
  const NetworkAuthResult r
      = network_authenticate (*prover, claimed, registry_, config_.defense.fs_rounds, crypto_rng_);
  charge_identification (origin, evaluator, r.rounds_run);
  if (r.accepted)
    {
      verdicts_.raise (origin, NodeVerdict::Suspected);
    }
  else
    {
      reject (origin, evaluator);
    }
  if (evaluator < n_ && is_head_[evaluator])
    {
      auth_state (evaluator).verdicts ().raise (origin, verdicts_.get (origin));
    }
}

void
Simulation::reject (NodeId origin, NodeId evaluator)
{
  if (!verdicts_.raise (origin, NodeVerdict::Rejected))
    {
      return;
    }
  trace_.record (TraceKind::Rejected, now (), origin);
  if (evaluator < n_)
    {
      Frame notice = control_frame (FrameKind::SynA, evaluator);
      notice.subject = origin;
      broadcast (evaluator, notice);
    }
}

} // namespace

RunResult
run_detailed (const SimConfig &config, const RunOptions &options)
{
  Simulation sim (config, options);
  return sim.run ();
}

RunMetrics
run (const SimConfig &config)
{
  return run_detailed (config).metrics;
}

} // namespace asda
