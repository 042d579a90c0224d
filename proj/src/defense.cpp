#include "asda/defense.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace asda {

std::string_view
to_string (AuthMode mode)
{
  return mode == AuthMode::Normal ? "normal" : "auth_required";
}

std::string_view
to_string (SynVerdict verdict)
{
  switch (verdict)
    {
    case SynVerdict::Accept:
      return "accept";
    case SynVerdict::Reject:
      return "reject";
    case SynVerdict::EscalateAuth:
      return "escalate_auth";
    }
  return "unknown";
}

std::string_view
to_string (NodeVerdict verdict)
{
  switch (verdict)
    {
    case NodeVerdict::Accepted:
      return "accepted";
    case NodeVerdict::Suspected:
      return "suspected";
    case NodeVerdict::Rejected:
      return "rejected";
    }
  return "unknown";
}

NodeVerdict
VerdictBook::get (NodeId id) const
{
  auto it = entries_.find (id);
  return it == entries_.end () ? NodeVerdict::Accepted : it->second;
}

bool
VerdictBook::raise (NodeId id, NodeVerdict verdict)
{
  if (verdict <= get (id))
    {
      return false;
    }
  entries_[id] = verdict;
  return true;
}

AuthToken
make_token (const crypto::Key128 &session_key, NodeId id, std::uint64_t cycle)
{
  crypto::Block in{};
  for (int i = 0; i < 8; ++i)
    {
      in[i] = static_cast<std::uint8_t> (cycle >> (56 - 8 * i));
    }
  for (int i = 0; i < 4; ++i)
    {
      in[8 + i] = static_cast<std::uint8_t> (id >> (24 - 8 * i));
    }
  return crypto::aes128_encrypt_block (session_key, in);
}

bool
token_matches (const AuthToken &expected, const AuthToken &presented, std::uint32_t token_bytes)
{
  const std::size_t n = std::min<std::size_t> (token_bytes, expected.size ());
  return std::equal (expected.begin (), expected.begin () + n, presented.begin ());
}

void
RateMonitor::prune (std::vector<double> &log, double now) const
{
  auto keep = log.begin ();
  while (keep != log.end () && *keep <= now - window_)
    {
      ++keep;
    }
  log.erase (log.begin (), keep);
}

void
RateMonitor::record (NodeId claimed, double now)
{
  auto &log = arrivals_[claimed];
  prune (log, now);
  log.push_back (now);
}

double
RateMonitor::rate (NodeId id, double now)
{
  auto it = arrivals_.find (id);
  if (it == arrivals_.end ())
    {
      return 0.0;
    }
  prune (it->second, now);
  return static_cast<double> (it->second.size ()) / window_;
}

double
RateMonitor::max_rate (double now)
{
  double best = 0.0;
  for (auto &[id, log] : arrivals_)
    {
      prune (log, now);
      best = std::max (best, static_cast<double> (log.size ()) / window_);
    }
  return best;
}

ClusterAuthState::ClusterAuthState (NodeId head, const DefenseParams &params, double window_s,
                                    double link_delay_s)
    : head_ (head), params_ (params), link_delay_ (link_delay_s), monitor_ (window_s)
{
}

void
ClusterAuthState::install_key (NodeId member, const crypto::Key128 &key)
{
  keys_[member] = key;
}

void
ClusterAuthState::enter_auth_mode (double now)
{
  if (mode_ == AuthMode::Normal)
    {
      mode_ = AuthMode::AuthRequired;
      escalated_at_ = now;
    }
}

SynDecision
ClusterAuthState::on_syn_received (const Frame &frame, const ClusterAssignment &membership,
                                   double now)
{
  SynDecision out;
  const auto head = membership.head_of (frame.src);
  if (!head || *head != head_)
    {
      out.verdict = SynVerdict::Reject;
      return out;
    }

  monitor_.record (frame.src, now);
  out.observed_rate = monitor_.rate (frame.src, now);

  if (mode_ == AuthMode::Normal)
    {
      if (out.observed_rate > params_.syn_rate_threshold)
        {
          enter_auth_mode (now);
          escalations_.push_back ({now, frame.src, out.observed_rate});
          out.verdict = SynVerdict::EscalateAuth;
        }
      return out;
    }

  if (frame.auth_token)
    {
      auto key = keys_.find (frame.src);
      const double period = monitor_.window ();
      const auto cycle_now = static_cast<std::uint64_t> (std::floor (now / period));
      const bool fresh
          = frame.cycle == cycle_now
            || (frame.cycle + 1 == cycle_now
                && now - static_cast<double> (cycle_now) * period <= link_delay_);
      const std::pair<NodeId, std::uint64_t> use{frame.src, frame.cycle};
      if (key != keys_.end () && fresh && used_tokens_.count (use) == 0
          && token_matches (make_token (key->second, frame.src, frame.cycle), *frame.auth_token,
                            params_.token_bytes))
        {
          used_tokens_.insert (use);
          return out;
        }
    }
  else if (frame.sent_at < escalated_at_ + link_delay_)
    {
      // sent before the sender could have heard SYN-A
      out.verdict = SynVerdict::Reject;
      return out;
    }

  out.verdict = SynVerdict::Reject;
  out.suspect_origin = true;
  verdicts_.raise (frame.origin, verdicts_.suspected (frame.origin) ? NodeVerdict::Rejected
                                                                    : NodeVerdict::Suspected);
  return out;
}

bool
ClusterAuthState::maybe_exit_auth_mode (double now)
{
  if (mode_ != AuthMode::AuthRequired)
    {
      return false;
    }
  if (monitor_.max_rate (now) < params_.syn_rate_threshold * params_.auth_mode_exit_factor)
    {
      mode_ = AuthMode::Normal;
      return true;
    }
  return false;
}

void
IdentityRegistry::enroll (NodeId id, crypto::PublicIdentity identity)
{
  entries_[id] = std::move (identity);
}

const crypto::PublicIdentity *
IdentityRegistry::find (NodeId id) const
{
  auto it = entries_.find (id);
  return it == entries_.end () ? nullptr : &it->second;
}

NetworkAuthResult
network_authenticate (crypto::Prover &prover, NodeId claimed, const IdentityRegistry &registry,
                      std::uint32_t rounds, Rng &verifier_rng)
{
  const crypto::PublicIdentity *identity = registry.find (claimed);
  if (identity == nullptr)
    {
      return {};
    }
  NetworkAuthResult out;
  out.rounds_run = rounds;
  out.accepted = crypto::fs_identify (prover, *identity, rounds, verifier_rng);
  return out;
}

std::string_view
to_string (InterlockLeg leg)
{
  switch (leg)
    {
    case InterlockLeg::FirstHalf:
      return "first_half";
    case InterlockLeg::Acknowledge:
      return "acknowledge";
    case InterlockLeg::SecondHalf:
      return "second_half";
    case InterlockLeg::Probe:
      return "probe";
    }
  return "unknown";
}

namespace {

std::vector<std::uint8_t>
encrypt_half (const crypto::KeyHalf &half, const crypto::RsaPublicKey &key)
{
  const crypto::BigInt c = crypto::rsa_encrypt (crypto::from_bytes (half), key);
  return crypto::to_bytes (c, crypto::byte_length (key.modulus));
}

std::optional<crypto::KeyHalf>
decrypt_half (const std::vector<std::uint8_t> &wire, const crypto::RsaKeyPair &key)
{
  const crypto::BigInt c = crypto::from_bytes (wire);
  if (c >= key.modulus)
    {
      return std::nullopt;
    }
  const crypto::BigInt m = crypto::rsa_decrypt (c, key);
  if (crypto::byte_length (m) > 8)
    {
      return std::nullopt;
    }
  const auto bytes = crypto::to_bytes (m, 8);
  crypto::KeyHalf half{};
  std::copy (bytes.begin (), bytes.end (), half.begin ());
  return half;
}

} // namespace

InterlockResult
interlock_exchange (NodeId initiator, NodeId responder, const crypto::RsaKeyPair &responder_keys,
                    Rng &rng, const InterlockChannel &channel)
{
  InterlockResult out;
  auto &session = out.session;
  session.initiator = initiator;
  session.responder = responder;
  session.session_key = crypto::random_key (rng);
  session.halves = crypto::split_key (session.session_key);

  auto send = [&] (InterlockLeg leg, std::vector<std::uint8_t> &payload) {
    const bool delivered = channel ? channel (leg, payload) : true;
    out.frames.push_back ({leg, payload.size (), delivered});
    return delivered;
  };
  auto fail = [&] (InterlockOutcome outcome) {
    session.state = crypto::InterlockState::Failed;
    out.outcome = outcome;
    out.responder_suspected = outcome == InterlockOutcome::AuthenticationFailure;
    return out;
  };

  const auto pub = responder_keys.public_key ();
  std::vector<std::uint8_t> first = encrypt_half (session.halves.first, pub);
  session.state = crypto::InterlockState::SentFirstHalf;
  if (!send (InterlockLeg::FirstHalf, first))
    {
      return fail (InterlockOutcome::Timeout);
    }

  std::vector<std::uint8_t> ack{0x06};
  session.state = crypto::InterlockState::AwaitingResponse;
  if (!send (InterlockLeg::Acknowledge, ack))
    {
      return fail (InterlockOutcome::Timeout);
    }

  std::vector<std::uint8_t> second = encrypt_half (session.halves.second, pub);
  if (!send (InterlockLeg::SecondHalf, second))
    {
      return fail (InterlockOutcome::Timeout);
    }

  crypto::Block probe_text{};
  rng.fill (probe_text);
  std::vector<std::uint8_t> probe
      = crypto::serialize (crypto::seal (session.session_key, probe_text, rng));
  if (!send (InterlockLeg::Probe, probe))
    {
      return fail (InterlockOutcome::Timeout);
    }

  const auto a = decrypt_half (first, responder_keys);
  const auto b = decrypt_half (second, responder_keys);
  if (!a || !b)
    {
      return fail (InterlockOutcome::AuthenticationFailure);
    }
  out.responder_key = crypto::join_key (*a, *b);
  try
    {
      const auto opened = crypto::open (out.responder_key, crypto::parse_sealed (probe));
      if (!std::equal (opened.begin (), opened.end (), probe_text.begin (), probe_text.end ()))
        {
          return fail (InterlockOutcome::AuthenticationFailure);
        }
    }
  catch (const crypto::AuthenticationError &)
    {
      return fail (InterlockOutcome::AuthenticationFailure);
    }
  catch (const std::invalid_argument &)
    {
      return fail (InterlockOutcome::AuthenticationFailure);
    }
  session.state = crypto::InterlockState::Complete;
  out.outcome = InterlockOutcome::Complete;
  return out;
}

ConfusionMatrix
final_classification (const VerdictBook &verdicts, const std::vector<bool> &ground_truth)
{
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < ground_truth.size (); ++i)
    {
      const bool positive = verdicts.rejected (static_cast<NodeId> (i));
      if (ground_truth[i])
        {
          ++(positive ? cm.tp : cm.fn);
        }
      else
        {
          ++(positive ? cm.fp : cm.tn);
        }
    }
  return cm;
}

} // namespace asda
