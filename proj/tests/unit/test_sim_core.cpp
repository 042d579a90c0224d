#include <algorithm>
#include <set>
#include <string>

#include "doctest.h"

#include "asda/config.hpp"
#include "asda/event_queue.hpp"
#include "asda/random.hpp"
#include "asda/topology.hpp"

using namespace asda;

TEST_CASE ("event queue pops equal times in scheduling order")
{
  EventQueue<int> q;
  q.schedule (2.0, 20);
  q.schedule (1.0, 10);
  q.schedule (1.0, 11);
  q.schedule (1.0, 12);
  CHECK (q.pop ().payload == 10);
  CHECK (q.pop ().payload == 11);
  CHECK (q.pop ().payload == 12);
  CHECK (q.now () == 1.0);
  CHECK (q.pop ().payload == 20);
  CHECK (q.empty ());
}

TEST_CASE ("event at the current clock is next")
{
  EventQueue<int> q;
  q.schedule (1.0, 1);
  q.schedule (5.0, 5);
  q.pop ();
  q.schedule (q.now (), 2);
  CHECK (q.pop ().payload == 2);
}

TEST_CASE ("past-dated events are refused")
{
  EventQueue<int> q;
  q.schedule (1.0, 1);
  q.pop ();
  CHECK_THROWS_AS (q.schedule (1.0 - 1e-9, 0), SchedulingError);
  EventQueue<int> empty;
  CHECK_THROWS_AS (empty.pop (), SchedulingError);
}

TEST_CASE ("sequence numbers are never reused")
{
  EventQueue<int> q;
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 50; ++i)
    {
      CHECK (seen.insert (q.schedule (static_cast<double> (i % 3), i)).second);
      if (i % 4 == 0)
        {
          q.pop ();
        }
    }
}

TEST_CASE ("queue order matches a sorted oracle")
{
  Rng rng (7);
  EventQueue<int> q;
  std::vector<std::pair<double, int>> oracle;
  for (int i = 0; i < 500; ++i)
    {
      const double t = static_cast<double> (rng.below (20));
      q.schedule (t, i);
      oracle.emplace_back (t, i);
    }
  std::stable_sort (oracle.begin (), oracle.end (),
                    [] (const auto &a, const auto &b) { return a.first < b.first; });
  for (const auto &[t, id] : oracle)
    {
      const auto e = q.pop ();
      CHECK (e.time == t);
      CHECK (e.payload == id);
    }
}

TEST_CASE ("defaults follow the parameter table")
{
  const SimConfig c;
  CHECK (c.field_width_m == 80.0);
  CHECK (c.field_height_m == 80.0);
  CHECK (c.sim_time_s == 70.0);
  CHECK (c.node_count == 300);
  CHECK (c.duty_cycle_slots == 20);
  CHECK (c.packet_size_bytes == 512);
  CHECK (c.control_frame_bytes == 30);
  CHECK (c.syn_frame_bytes == 10);
  CHECK (c.initial_energy_j == 35.0);
  CHECK (c.power.idle_w == doctest::Approx (41e-3));
  CHECK (c.power.sleep_w == doctest::Approx (25e-6));
  CHECK (c.sink_position () == Position{40.0, 40.0});
  CHECK_NOTHROW (validate (c));
}

TEST_CASE ("validate names the bad field")
{
  SimConfig c;
  c.misbehaving_ratio = 1.5;
  try
    {
      validate (c);
      FAIL ("expected ConfigError");
    }
  catch (const ConfigError &e)
    {
      CHECK (std::string (e.what ()).find ("misbehaving_ratio") != std::string::npos);
    }
  c = SimConfig{};
  c.awake_slots = 21;
  CHECK_THROWS_AS (validate (c), ConfigError);
  c = SimConfig{};
  c.initial_energy_j = 0.0;
  CHECK_THROWS_AS (validate (c), ConfigError);
}

TEST_CASE ("topology attacker counts")
{
  SimConfig c;
  c.misbehaving_ratio = 0.0;
  Topology t = build_topology (c);
  CHECK (t.sensors.size () == 300);
  CHECK (t.attacker_count () == 0);

  c.misbehaving_ratio = 0.05;
  CHECK (build_topology (c).attacker_count () == 15);
  c.misbehaving_ratio = 0.35;
  CHECK (build_topology (c).attacker_count () == 105);

  CHECK (attacker_count_for (0.001, 300) == 1);
  CHECK (attacker_count_for (1.0, 300) == 300);
  CHECK (attacker_count_for (0.15, 300) == 45);
}

TEST_CASE ("topology is deterministic per seed and inside the field")
{
  SimConfig c;
  c.misbehaving_ratio = 0.25;
  const Topology a = build_topology (c);
  const Topology b = build_topology (c);
  for (std::size_t i = 0; i < a.sensors.size (); ++i)
    {
      CHECK (a.sensors[i].position == b.sensors[i].position);
      CHECK (a.sensors[i].role == b.sensors[i].role);
      CHECK (a.sensors[i].position.x >= 0.0);
      CHECK (a.sensors[i].position.x <= c.field_width_m);
      CHECK (a.sensors[i].position.y >= 0.0);
      CHECK (a.sensors[i].position.y <= c.field_height_m);
    }
  CHECK (a.base_station.role == Role::BaseStation);
  CHECK (a.base_station.id == c.node_count);
  CHECK (a.base_station.energy.is_unbounded ());
  CHECK (a.base_station.position == c.sink_position ());

  c.rng_seed = 2;
  const Topology other = build_topology (c);
  CHECK_FALSE (other.sensors[0].position == a.sensors[0].position);
}

TEST_CASE ("rng streams are distinct")
{
  std::set<std::uint64_t> seeds;
  for (Stream s : {Stream::Topology, Stream::Traffic, Stream::Attack, Stream::Crypto})
    {
      seeds.insert (derive_seed (1, s));
    }
  CHECK (seeds.size () == 4);
  CHECK (derive_seed (1, Stream::Traffic) != derive_seed (2, Stream::Traffic));

  Rng r (3);
  for (int i = 0; i < 1000; ++i)
    {
      const double u = r.uniform ();
      CHECK (u >= 0.0);
      CHECK (u < 1.0);
      CHECK (r.below (7) < 7);
    }
}
