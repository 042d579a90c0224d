#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "asda/clustering.hpp"
#include "asda/config.hpp"
#include "asda/crypto/identification.hpp"
#include "asda/crypto/interlock.hpp"
#include "asda/crypto/rsa.hpp"
#include "asda/crypto/symmetric.hpp"
#include "asda/mac.hpp"
#include "asda/random.hpp"

namespace asda {

enum class AuthMode : std::uint8_t
{
  Normal,
  AuthRequired,
};

enum class SynVerdict : std::uint8_t
{
  Accept,
  Reject,
  EscalateAuth,
};

enum class NodeVerdict : std::uint8_t
{
  Accepted,
  Suspected,
  Rejected,
};

std::string_view to_string (AuthMode mode);
std::string_view to_string (SynVerdict verdict);
std::string_view to_string (NodeVerdict verdict);

/// Per-node verdicts that only ever move Accepted -> Suspected -> Rejected.
class VerdictBook
{
public:
  NodeVerdict get (NodeId id) const;
  bool rejected (NodeId id) const { return get (id) == NodeVerdict::Rejected; }
  bool suspected (NodeId id) const { return get (id) == NodeVerdict::Suspected; }

  /// Moves `id` to `verdict` if that is further along; returns whether it changed.
  bool raise (NodeId id, NodeVerdict verdict);

  const std::map<NodeId, NodeVerdict> &entries () const { return entries_; }

private:
  std::map<NodeId, NodeVerdict> entries_;
};

/// AES-128 under the member's session key of (cycle || id), zero padded.
/// Only the first token_bytes are carried on the wire.
AuthToken make_token (const crypto::Key128 &session_key, NodeId id, std::uint64_t cycle);
bool token_matches (const AuthToken &expected, const AuthToken &presented,
                    std::uint32_t token_bytes);

struct SynDecision
{
  SynVerdict verdict = SynVerdict::Accept;
  // origin of the frame should be checked through the base station
  bool suspect_origin = false;
  double observed_rate = 0.0;
};

/// Arrival times of frames claiming one id, over a trailing window.
class RateMonitor
{
public:
  explicit RateMonitor (double window_s = 1.0) : window_ (window_s) {}

  void record (NodeId claimed, double now);
  /// Frames per second claimed by `id` in (now - window, now].
  double rate (NodeId id, double now);
  double window () const { return window_; }
  /// Highest rate across all ids seen so far.
  double max_rate (double now);

private:
  void prune (std::vector<double> &log, double now) const;

  double window_;
  std::map<NodeId, std::vector<double>> arrivals_;
};

/// Audit entry for every transition into AuthRequired.
struct EscalationRecord
{
  double time = 0.0;
  NodeId claimed = 0;
  double rate = 0.0;
};

/// SYN screening at one cluster head.
class ClusterAuthState
{
public:
  ClusterAuthState (NodeId head, const DefenseParams &params, double window_s,
                    double link_delay_s = 0.0);

  NodeId head () const { return head_; }
  AuthMode mode () const { return mode_; }
  double escalated_at () const { return escalated_at_; }

  /// Session key the base station handed over for a member.
  void install_key (NodeId member, const crypto::Key128 &key);
  bool has_key (NodeId member) const { return keys_.count (member) != 0; }

  /// Frames from non-members are rejected. Under Normal mode a SYN is used
  /// unauthenticated until its claimed sender exceeds the rate threshold,
  /// which switches the cluster to AuthRequired. Under AuthRequired only a
  /// fresh valid token is accepted; a tokenless or bad-token frame is
  /// rejected and its radio becomes suspected, except for frames that were
  /// already in flight when the mode changed.
  SynDecision on_syn_received (const Frame &frame, const ClusterAssignment &membership,
                               double now);

  /// Leaves AuthRequired once every observed rate is below threshold * exit
  /// factor. Returns true on the transition (the head then broadcasts NO-SYN-A).
  bool maybe_exit_auth_mode (double now);

  /// Forces AuthRequired, e.g. on a SYN-A forwarded by a member.
  void enter_auth_mode (double now);

  double observed_rate (NodeId claimed, double now) { return monitor_.rate (claimed, now); }

  const VerdictBook &verdicts () const { return verdicts_; }
  VerdictBook &verdicts () { return verdicts_; }
  const std::vector<EscalationRecord> &escalations () const { return escalations_; }

private:
  NodeId head_;
  DefenseParams params_;
  double link_delay_;
  AuthMode mode_ = AuthMode::Normal;
  double escalated_at_ = 0.0;
  RateMonitor monitor_;
  std::map<NodeId, crypto::Key128> keys_;
  std::set<std::pair<NodeId, std::uint64_t>> used_tokens_;
  VerdictBook verdicts_;
  std::vector<EscalationRecord> escalations_;
};

/// (G, F) pairs the base station holds for registered nodes.
class IdentityRegistry
{
public:
  void enroll (NodeId id, crypto::PublicIdentity identity);
  const crypto::PublicIdentity *find (NodeId id) const;
  std::size_t size () const { return entries_.size (); }

private:
  std::map<NodeId, crypto::PublicIdentity> entries_;
};

struct NetworkAuthResult
{
  bool accepted = false;
  std::uint32_t rounds_run = 0; // 0 when the claimed id had no registration
};

/// The evaluator fetches F for `claimed` from the base station and runs the
/// identification protocol against `prover`. Unregistered ids are rejected
/// without running any round.
NetworkAuthResult network_authenticate (crypto::Prover &prover, NodeId claimed,
                                        const IdentityRegistry &registry,
                                        std::uint32_t rounds, Rng &verifier_rng);

enum class InterlockLeg : std::uint8_t
{
  FirstHalf,
  Acknowledge,
  SecondHalf,
  Probe,
};

std::string_view to_string (InterlockLeg leg);

/// Transport between the two parties. Returning false drops the frame; the
/// payload may be rewritten in place to model tampering.
using InterlockChannel = std::function<bool (InterlockLeg, std::vector<std::uint8_t> &)>;

enum class InterlockOutcome : std::uint8_t
{
  Complete,
  Timeout,
  AuthenticationFailure,
};

struct InterlockFrameRecord
{
  InterlockLeg leg = InterlockLeg::FirstHalf;
  std::size_t bytes = 0;
  bool delivered = false;
};

struct InterlockResult
{
  crypto::InterlockSession session;
  InterlockOutcome outcome = InterlockOutcome::Timeout;
  bool responder_suspected = false;
  crypto::Key128 responder_key{}; // key as joined by the responder
  std::vector<InterlockFrameRecord> frames;
};

/// Initiator draws a session key, splits it, and sends each half encrypted
/// under the responder's RSA key in separate phases, the second only after
/// the responder acknowledges the first. The responder joins the halves and
/// must open an AES-GCM probe sealed under the session key.
InterlockResult interlock_exchange (NodeId initiator, NodeId responder,
                                    const crypto::RsaKeyPair &responder_keys, Rng &rng,
                                    const InterlockChannel &channel = {});

struct ConfusionMatrix
{
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t tn = 0;
  std::uint64_t fn = 0;

  std::uint64_t total () const { return tp + fp + tn + fn; }
  bool operator== (const ConfusionMatrix &) const = default;
};

/// Positive = rejected. `ground_truth[i]` is true for attackers; ids index
/// into it.
ConfusionMatrix final_classification (const VerdictBook &verdicts,
                                      const std::vector<bool> &ground_truth);

} // namespace asda
