// Acceptance runner: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "asda/crypto/identification.hpp"
#include "asda/crypto/rsa.hpp"
#include "asda/defense.hpp"
#include "asda/energy.hpp"
#include "asda/experiment.hpp"
#include "asda/simulator.hpp"

using namespace asda;

namespace {

struct Outcome
{
  bool pass = false;
  std::string detail;
};

std::string
fmt (const char *f, ...)
{
  char buf[512];
  va_list ap;
  va_start (ap, f);
  std::vsnprintf (buf, sizeof buf, f, ap);
  va_end (ap);
  return buf;
}

// Every run passes through here so the conservation check covers all of them.
struct Conservation
{
  std::uint64_t runs = 0;
  std::uint64_t nodes = 0;
  std::uint64_t violations = 0;
  double worst = 0.0;

  void
  check (const RunMetrics &m)
  {
    ++runs;
    for (std::size_t i = 0; i < m.ledgers.size (); ++i)
      {
        ++nodes;
        const double drawn = m.initial_energy[i] - m.residual_energy[i];
        const double rel = std::abs (drawn - m.ledgers[i].total ()) / m.initial_energy[i];
        worst = std::max (worst, rel);
        if (!(rel <= 1e-9))
          {
            ++violations;
          }
      }
  }
};

Conservation g_conservation;

RunMetrics
checked_run (const SimConfig &c)
{
  RunMetrics m = run (c);
  g_conservation.check (m);
  return m;
}

RunResult
checked_run (const SimConfig &c, const RunOptions &opt)
{
  RunResult r = run_detailed (c, opt);
  g_conservation.check (r.metrics);
  return r;
}

bool
same (double a, double b)
{
  return (std::isnan (a) && std::isnan (b)) || a == b;
}

// ---------------------------------------------------------------------------
// ratio grid, 10 seeds, defense on and off

struct Cell
{
  double ratio;
  std::uint64_t seed;
  bool defense;
  ResultRow row;
};

std::vector<Cell>
ratio_grid_runs ()
{
  std::vector<Cell> cells;
  for (double ratio : default_ratio_grid ())
    {
      for (std::uint64_t seed = 1; seed <= 10; ++seed)
        {
          for (bool defense : {true, false})
            {
              SimConfig c;
              c.misbehaving_ratio = ratio;
              c.rng_seed = seed;
              c.defense_enabled = defense;
              cells.push_back (
                  {ratio, seed, defense,
                   make_row ("misbehaving_ratio", ratio, seed, defense, checked_run (c))});
            }
        }
    }
  return cells;
}

double
mean_of (const std::vector<Cell> &cells, double ratio, bool defense, double ResultRow::*field)
{
  double sum = 0.0;
  int n = 0;
  for (const auto &c : cells)
    {
      if (c.ratio == ratio && c.defense == defense)
        {
          sum += c.row.*field;
          ++n;
        }
    }
  return sum / n;
}

Outcome
ac1 (const std::vector<Cell> &cells)
{
  SimConfig c;
  c.misbehaving_ratio = 0.0;
  c.defense_enabled = true;
  const auto t0 = std::chrono::steady_clock::now ();
  const RunMetrics on = run (c);
  const double secs
      = std::chrono::duration<double> (std::chrono::steady_clock::now () - t0).count ();
  g_conservation.check (on);
  c.defense_enabled = false;
  const RunMetrics off = checked_run (c);

  double worst_gap = std::abs (residual_energy_percent (on) - residual_energy_percent (off));
  bool ok = detection_metrics (on.confusion).dr == 100.0 && pdr_percent (on) == 100.0;
  // the same fixed points on every seed of the grid
  for (const auto &a : cells)
    {
      if (a.ratio != 0.0 || !a.defense)
        {
          continue;
        }
      ok = ok && a.row.dr_pct == 100.0 && a.row.pdr_pct == 100.0;
      for (const auto &b : cells)
        {
          if (b.ratio == 0.0 && !b.defense && b.seed == a.seed)
            {
              worst_gap = std::max (worst_gap, std::abs (a.row.residual_pct - b.row.residual_pct));
            }
        }
    }
  ok = ok && worst_gap <= 0.5 && secs < 10.0;
  return {ok, fmt ("DR %.3f, PDR %.3f, worst residual gap %.4f pp (<= 0.5), 300 nodes / 70 s "
                   "in %.2f s (< 10)",
                   detection_metrics (on.confusion).dr, pdr_percent (on), worst_gap, secs)};
}

Outcome
ac2 (const std::vector<Cell> &cells)
{
  const auto grid = default_ratio_grid ();
  bool ok = true;
  std::string on_trace, off_trace;
  double prev = 0.0;
  for (std::size_t i = 0; i < grid.size (); ++i)
    {
      const double on = mean_of (cells, grid[i], true, &ResultRow::dr_pct);
      const double off = mean_of (cells, grid[i], false, &ResultRow::dr_pct);
      if (i > 0 && on > prev + 1.0)
        {
          ok = false;
        }
      if (grid[i] >= 0.05 && !(on > off))
        {
          ok = false;
        }
      prev = on;
      on_trace += fmt ("%s%.1f", i ? "/" : "", on);
      off_trace += fmt ("%s%.1f", i ? "/" : "", off);
    }
  return {ok, fmt ("mean DR on %s, off %s", on_trace.c_str (), off_trace.c_str ())};
}

Outcome
ac3 (const std::vector<Cell> &cells)
{
  const double on = mean_of (cells, 0.35, true, &ResultRow::residual_pct);
  const double off = mean_of (cells, 0.35, false, &ResultRow::residual_pct);
  return {on - off >= 5.0,
          fmt ("ratio 0.35: residual on %.3f, off %.3f, gain %.3f pp (>= 5)", on, off, on - off)};
}

Outcome
ac4 ()
{
  const double d0 = crossover_distance (RadioParams{});
  return {std::abs (d0 - 115.470) <= 1e-3, fmt ("d0 = %.6f m", d0)};
}

// ---------------------------------------------------------------------------
// RSA against repeated multiplication

std::uint64_t
naive_pow (std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus)
{
  std::uint64_t acc = 1 % modulus;
  base %= modulus;
  for (std::uint64_t i = 0; i < exponent; ++i)
    {
      acc = acc * base % modulus;
    }
  return acc;
}

bool
trial_prime (std::uint64_t n)
{
  if (n < 2)
    {
      return false;
    }
  for (std::uint64_t d = 2; d * d <= n; ++d)
    {
      if (n % d == 0)
        {
          return false;
        }
    }
  return true;
}

std::uint64_t
u64 (const crypto::BigInt &v)
{
  return v.convert_to<std::uint64_t> ();
}

Outcome
ac6 ()
{
  using namespace crypto;
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 50; p < 700; ++p)
    {
      if (trial_prime (p))
        {
          primes.push_back (p);
        }
    }
  Rng rng (6);
  int good = 0;
  const int pairs = 1000;
  for (int i = 0; i < pairs; ++i)
    {
      const std::uint64_t s = primes[rng.below (primes.size ())];
      std::uint64_t r = s;
      while (r == s)
        {
          r = primes[rng.below (primes.size ())];
        }
      const std::uint64_t phi = (s - 1) * (r - 1);
      std::uint64_t e = 0;
      do
        {
          e = 3 + rng.below (phi - 3);
        }
      while (std::gcd (e, phi) != 1);
      const RsaKeyPair k = rsa_keygen (s, r, e, rng);
      const std::uint64_t n = s * r;
      const std::uint64_t d = u64 (k.private_exponent);
      const std::uint64_t m = rng.below (n);
      const BigInt c = rsa_encrypt (m, k.public_key ());
      const bool ok = u64 (k.modulus) == n && (e * d) % phi == 1 && u64 (c) == naive_pow (m, e, n)
                      && rsa_decrypt (c, k.private_key ()) == m && rsa_decrypt (c, k) == m
                      && naive_pow (u64 (c), d, n) == m;
      good += ok ? 1 : 0;
    }

  const RsaKeyPair w = rsa_keygen (61, 53, 17, rng);
  const BigInt c65 = rsa_encrypt (65, w.public_key ());
  const bool worked = w.private_exponent == 2753 && w.modulus == 3233 && c65 == 2790
                      && rsa_decrypt (BigInt (2790), w.private_key ()) == 65;
  return {good == pairs && worked,
          fmt ("%d/%d pairs match the oracle; (61, 53, 17): d = %s, 65 -> %s", good, pairs,
               w.private_exponent.str ().c_str (), c65.str ().c_str ())};
}

Outcome
ac7 ()
{
  using namespace crypto;
  Rng rng (7);
  const std::uint32_t k = DefenseParams{}.fs_rounds;
  const RsaKeyPair keys = rsa_generate (SimConfig{}.rsa_prime_bits, 65537, rng);
  const IdentificationMaterial mat
      = make_identification (random_between (2, keys.modulus, rng), keys.modulus);
  const PublicIdentity pub{mat.modulus, mat.square};
  Rng verifier (70);
  int honest = 0, guessing = 0, random = 0;
  for (int i = 0; i < 1000; ++i)
    {
      HonestProver h (mat.secret, mat.modulus, Rng (1000 + i));
      honest += fs_identify (h, pub, k, verifier) ? 1 : 0;
      GuessingProver g (mat.modulus, mat.square, Rng (5000 + i));
      guessing += fs_identify (g, pub, k, verifier) ? 1 : 0;
      RandomResponder x (mat.modulus, Rng (9000 + i));
      random += fs_identify (x, pub, k, verifier) ? 1 : 0;
    }
  return {honest == 1000 && guessing == 0 && random == 0,
          fmt ("k = %u: honest %d/1000, guessing cheater %d/1000, random responder %d/1000", k,
               honest, guessing, random)};
}

Outcome
ac8 ()
{
  using namespace crypto;
  Rng rng (8);
  const RsaKeyPair keys = rsa_generate (SimConfig{}.rsa_prime_bits, 65537, rng);
  int complete = 0;
  for (int i = 0; i < 1000; ++i)
    {
      const InterlockResult r = interlock_exchange (1, 2, keys, rng);
      complete += r.outcome == InterlockOutcome::Complete && r.responder_key == r.session.session_key
                      ? 1
                      : 0;
    }

  int attacked = 0, failed = 0;
  std::vector<std::uint8_t> stale_second;
  auto attack = [&] (const InterlockChannel &ch) {
    ++attacked;
    const InterlockResult r = interlock_exchange (1, 2, keys, rng, ch);
    failed += r.outcome == InterlockOutcome::AuthenticationFailure && r.responder_suspected ? 1 : 0;
  };
  for (int i = 0; i < 200; ++i)
    {
      // only the first half is genuine; it is sent twice
      std::vector<std::uint8_t> first;
      attack ([&] (InterlockLeg leg, std::vector<std::uint8_t> &p) {
        if (leg == InterlockLeg::FirstHalf)
          {
            first = p;
          }
        else if (leg == InterlockLeg::SecondHalf)
          {
            stale_second = p;
            p = first;
          }
        return true;
      });
      // only the second half is genuine; the first comes from an earlier session
      attack ([&] (InterlockLeg leg, std::vector<std::uint8_t> &p) {
        if (leg == InterlockLeg::FirstHalf)
          {
            p = stale_second;
          }
        return true;
      });
      for (InterlockLeg target : {InterlockLeg::FirstHalf, InterlockLeg::SecondHalf})
        {
          attack ([&] (InterlockLeg leg, std::vector<std::uint8_t> &p) {
            if (leg == target)
              {
                p[rng.below (p.size ())] ^= static_cast<std::uint8_t> (1u << rng.below (8));
              }
            return true;
          });
        }
      attack ([&] (InterlockLeg leg, std::vector<std::uint8_t> &p) {
        if (leg == InterlockLeg::SecondHalf)
          {
            rng.fill (p);
          }
        return true;
      });
    }
  return {complete == 1000 && failed == attacked,
          fmt ("honest %d/1000 complete; single-half or tampered %d/%d rejected", complete, failed,
               attacked)};
}

// ---------------------------------------------------------------------------
// flood mechanism on a scripted line of eight nodes, attacker at the end

double
window_energy (const TraceLog &trace, NodeId node, double from, double to, bool sleep_only)
{
  double sum = 0.0;
  for (const auto &rec : trace.records ())
    {
      if (rec.kind == TraceKind::Debit && rec.node == node && rec.time > from && rec.time <= to
          && (!sleep_only || rec.category == EnergyCategory::Sleep))
        {
          sum += rec.amount;
        }
    }
  return sum;
}

Outcome
ac9 ()
{
  std::vector<ScriptedNode> layout;
  for (int i = 0; i < 8; ++i)
    {
      layout.push_back ({{10.0 + 5.0 * i, 40.0}, i == 7});
    }
  SimConfig c;
  c.defense_enabled = false;
  c.sim_time_s = 8.0;
  c.attack_interval_s = 0.02;
  c.rsa_prime_bits = 128;
  const double awake_fraction = c.awake_window_s () / c.cycle_period_s;
  const double per_cycle = (c.power.idle_w - c.power.sleep_w) * (1.0 - awake_fraction) * c.cycle_period_s;
  // whole cycles well after the attacker has something to replay
  const int first_cycle = 2, last_cycle = 7;

  bool ok = c.attack_interval_s < c.slot_length_s ();
  double max_sleep = 0.0;
  double min_margin = std::numeric_limits<double>::infinity ();
  for (AttackKind kind : {AttackKind::SynReplay, AttackKind::ForgedIdSyn, AttackKind::RtsFlood})
    {
      c.attack_kind = kind;
      RunOptions opt;
      opt.layout = layout;
      opt.record_trace = true;
      const RunResult attacked = checked_run (c, opt);
      opt.suppress_attacks = true;
      const RunResult quiet = checked_run (c, opt);
      ok = ok && !attacked.attack_ticks.empty ();
      for (NodeId v = 0; v < 7; ++v)
        {
          for (int k = first_cycle; k < last_cycle; ++k)
            {
              const double from = k * c.cycle_period_s, to = (k + 1) * c.cycle_period_s;
              const double slept = window_energy (attacked.trace, v, from, to, true);
              const double extra = window_energy (attacked.trace, v, from, to, false)
                                   - window_energy (quiet.trace, v, from, to, false);
              max_sleep = std::max (max_sleep, slept);
              min_margin = std::min (min_margin, extra - per_cycle);
              ok = ok && slept == 0.0 && extra >= per_cycle;
            }
        }
    }
  return {ok, fmt ("SYN replay, forged SYN, RTS flood at %.3f s (< slot %.3f s): max victim "
                   "sleep energy %.3g J, smallest excess drain over %.4g J/cycle is %+.4g J",
                   c.attack_interval_s, c.slot_length_s (), max_sleep, per_cycle, min_margin)};
}

// ---------------------------------------------------------------------------
// determinism

std::string
slurp (const std::filesystem::path &p)
{
  std::ifstream in (p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf ();
  return ss.str ();
}

Outcome
ac10 (const std::vector<Cell> &cells)
{
  // a subset of the grid again, through the sweep runner
  SweepSpec grid;
  grid.axis = SweepAxis::MisbehavingRatio;
  grid.values = {0.05, 0.35, 0.75};
  grid.replications = 2;
  std::vector<ResultRow> earlier;
  for (const auto &c : cells)
    {
      if ((c.ratio == 0.05 || c.ratio == 0.35 || c.ratio == 0.75) && c.seed <= 2)
        {
          earlier.push_back (c.row);
        }
    }
  bool ok = format_csv (run_sweep (grid)) == format_csv (earlier);

  const auto dir = std::filesystem::temp_directory_path () / "asda-acceptance";
  std::filesystem::create_directories (dir);
  int configs = 0;
  for (AttackKind kind : {AttackKind::SynReplay, AttackKind::RtsFlood, AttackKind::ForgedIdSyn})
    {
      SweepSpec s;
      s.axis = SweepAxis::NodeCount;
      s.values = {20, 60};
      s.replications = 3;
      s.base.sim_time_s = 15.0;
      s.base.misbehaving_ratio = 0.2;
      s.base.attack_kind = kind;
      s.base.rsa_prime_bits = 128;
      s.base.rng_seed = 40;
      const auto a = dir / "a.csv", b = dir / "b.csv";
      write_csv (run_sweep (s), a);
      write_csv (run_sweep (s, DefenseSelection::Both, 3), b);
      ok = ok && slurp (a) == slurp (b) && !slurp (a).empty ();
      configs += 12;
    }
  std::filesystem::remove_all (dir);
  return {ok, fmt ("%zu grid rows rerun via sweep and %d small-config rows written twice are "
                   "byte-identical",
                   earlier.size (), configs)};
}

// ---------------------------------------------------------------------------
// metrics from a trace replay

struct Recount
{
  std::vector<std::uint64_t> sent, received;
  std::vector<double> residual;
  ConfusionMatrix confusion;
  ResultRow row;
};

Recount
replay (const SimConfig &c, const RunResult &r)
{
  const NodeId n = c.node_count;
  Recount out;
  out.sent.assign (n, 0);
  out.received.assign (n, 0);
  out.residual.assign (n, c.initial_energy_j);
  std::vector<NodeId> head_order;
  std::map<NodeId, double> first_elected, died;
  std::set<NodeId> rejected;
  double stop = 0.0;
  for (const auto &rec : r.trace.records ())
    {
      switch (rec.kind)
        {
        case TraceKind::Debit:
          if (rec.node < n)
            {
              double &e = out.residual[rec.node];
              e = rec.amount == e ? 0.0 : e - rec.amount;
            }
          break;
        case TraceKind::ReadingOriginated:
          ++out.sent[rec.node];
          break;
        case TraceKind::ReadingDelivered:
          ++out.received[rec.node];
          break;
        case TraceKind::HeadElected:
          if (first_elected.emplace (rec.node, rec.time).second)
            {
              head_order.push_back (rec.node);
            }
          break;
        case TraceKind::Death:
          died.emplace (rec.node, rec.time);
          break;
        case TraceKind::Rejected:
          rejected.insert (rec.node);
          break;
        case TraceKind::RunEnd:
          stop = rec.time;
          break;
        }
    }

  std::uint64_t x = 0, y = 0;
  for (NodeId i = 0; i < n; ++i)
    {
      x += out.received[i];
      y += out.sent[i];
      const bool attacker = r.sensors[i].is_attacker ();
      const bool flagged = rejected.count (i) > 0;
      ++(attacker ? (flagged ? out.confusion.tp : out.confusion.fn)
                  : (flagged ? out.confusion.fp : out.confusion.tn));
    }

  ResultRow &row = out.row;
  const double nan = std::nan ("");
  row.throughput_kbps = stop > 0.0 ? static_cast<double> (x) * c.packet_size_bytes / stop * 8.0 / 1000.0
                                   : nan;
  row.pdr_pct = y > 0 ? static_cast<double> (x) / static_cast<double> (y) * 100.0 : nan;
  if (!head_order.empty ())
    {
      row.lifetime_s = 0.0;
      for (NodeId h : head_order)
        {
          const auto d = died.find (h);
          const double end = d == died.end () ? stop : std::min (d->second, stop);
          row.lifetime_s += end - first_elected[h];
        }
    }
  else if (n > 0 && died.size () == n)
    {
      double last = 0.0;
      for (const auto &[id, t] : died)
        {
          last = std::max (last, t);
        }
      row.lifetime_s = last;
    }
  else
    {
      row.lifetime_s = stop;
    }
  double initial = 0.0, left = 0.0;
  for (NodeId i = 0; i < n; ++i)
    {
      initial += c.initial_energy_j;
      left += out.residual[i];
    }
  row.residual_pct = initial > 0.0 ? 100.0 * left / initial : 100.0;
  const auto &cm = out.confusion;
  row.dr_pct = cm.tp + cm.fn ? 100.0 * cm.tp / static_cast<double> (cm.tp + cm.fn) : 100.0;
  return out;
}

Outcome
ac11 ()
{
  Rng meta (11);
  const AttackKind kinds[] = {AttackKind::SynReplay, AttackKind::RtsFlood, AttackKind::ForgedIdSyn};
  const double ratios[] = {0.0, 0.1, 0.2, 0.3, 0.5};
  const double intervals[] = {0.02, 0.04, 0.1, 0.5};
  int agree = 0, unclustered = 0, with_deaths = 0;
  const int runs = 20;
  for (int i = 0; i < runs; ++i)
    {
      SimConfig c;
      c.node_count = static_cast<std::uint32_t> (2 + meta.below (29));
      c.transmission_range_m = meta.below (4) == 0 ? 12.0 : 150.0;
      c.sim_time_s = 2.0 + static_cast<double> (meta.below (14));
      c.misbehaving_ratio = ratios[meta.below (5)];
      c.attack_kind = kinds[meta.below (3)];
      c.attack_interval_s = intervals[meta.below (4)];
      c.defense_enabled = meta.coin ();
      c.rsa_prime_bits = 128;
      c.rng_seed = 500 + i;
      if (meta.below (3) == 0)
        {
          c.initial_energy_j = 0.05 + 0.1 * meta.uniform ();
        }
      RunOptions opt;
      opt.record_trace = true;
      const RunResult r = checked_run (c, opt);
      const Recount rc = replay (c, r);
      const ResultRow folded = make_row ("ac11", 0, c.rng_seed, c.defense_enabled, r.metrics);
      const bool ok = rc.sent == r.metrics.sent && rc.received == r.metrics.received
                      && rc.residual == r.metrics.residual_energy && rc.confusion == r.metrics.confusion
                      && same (rc.row.throughput_kbps, folded.throughput_kbps)
                      && same (rc.row.pdr_pct, folded.pdr_pct)
                      && same (rc.row.lifetime_s, folded.lifetime_s)
                      && same (rc.row.residual_pct, folded.residual_pct)
                      && same (rc.row.dr_pct, folded.dr_pct);
      if (!ok)
        {
          std::fprintf (stderr,
                        "AC11 run %d (n=%u t=%.0f): thr %.17g/%.17g pdr %.17g/%.17g life "
                        "%.17g/%.17g res %.17g/%.17g dr %.17g/%.17g\n",
                        i, c.node_count, c.sim_time_s, rc.row.throughput_kbps,
                        folded.throughput_kbps, rc.row.pdr_pct, folded.pdr_pct, rc.row.lifetime_s,
                        folded.lifetime_s, rc.row.residual_pct, folded.residual_pct,
                        rc.row.dr_pct, folded.dr_pct);
        }
      agree += ok ? 1 : 0;
      unclustered += r.metrics.clustered ? 0 : 1;
      with_deaths += std::any_of (r.sensors.begin (), r.sensors.end (),
                                  [] (const NodeState &s) { return s.death_time.has_value (); })
                         ? 1
                         : 0;
    }
  return {agree == runs, fmt ("%d/%d runs agree exactly (%d unclustered, %d with deaths)", agree,
                              runs, unclustered, with_deaths)};
}

void
report (bool &all, const char *id, const char *name, const Outcome &o)
{
  all = all && o.pass;
  std::printf ("[%s] %s %s: %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str ());
  std::fflush (stdout);
}

} // namespace

int
main ()
{
  const std::vector<Cell> cells = ratio_grid_runs ();
  bool all = true;
  report (all, "AC1", "zero-attacker fixed points", ac1 (cells));
  report (all, "AC2", "monotone detection trend", ac2 (cells));
  report (all, "AC3", "energy benefit at ratio 0.35", ac3 (cells));
  report (all, "AC4", "crossover distance", ac4 ());
  const Outcome o6 = ac6 ();
  const Outcome o7 = ac7 ();
  const Outcome o8 = ac8 ();
  const Outcome o9 = ac9 ();
  const Outcome o10 = ac10 (cells);
  const Outcome o11 = ac11 ();
  // conservation covers every simulation above, so it is reported once they are done
  report (all, "AC5", "energy conservation",
          {g_conservation.violations == 0 && g_conservation.runs > 0,
           fmt ("%llu runs, %llu node ledgers, worst relative error %.3g (<= 1e-9)",
                static_cast<unsigned long long> (g_conservation.runs),
                static_cast<unsigned long long> (g_conservation.nodes), g_conservation.worst)});
  report (all, "AC6", "RSA oracle equivalence", o6);
  report (all, "AC7", "identification soundness and completeness", o7);
  report (all, "AC8", "interlock integrity", o8);
  report (all, "AC9", "flood keeps victims awake", o9);
  report (all, "AC10", "determinism", o10);
  report (all, "AC11", "metric trace replay", o11);
  std::printf ("%s\n", all ? "all criteria passed" : "some criteria FAILED");
  return all ? 0 : 1;
}
