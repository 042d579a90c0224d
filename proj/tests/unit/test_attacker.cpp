#include "doctest.h"

#include "asda/attacker.hpp"

using namespace asda;

namespace {

Frame
overheard_syn (NodeId src, std::uint64_t cycle, double t)
{
  Frame f;
  f.kind = FrameKind::Syn;
  f.size_bytes = 10;
  f.src = src;
  f.origin = src;
  f.sleep_time_field = 0.1;
  f.cycle = cycle;
  f.sent_at = t;
  return f;
}

} // namespace

TEST_CASE ("attack schedule arithmetic")
{
  CHECK (attack_schedule (0.0, 0.5, 70.0).size () == 140);
  const auto ticks = attack_schedule (0.25, 0.04, 1.0);
  CHECK (ticks.front () == 0.25);
  CHECK (ticks.back () < 1.0);
  CHECK (ticks.size () == 19);
  CHECK (attack_schedule (2.0, 1.0, 2.0).empty ());
  CHECK_THROWS_AS (attack_schedule (0.0, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE ("captures are filtered by frame size")
{
  Attacker a (7, {}, FrameSizes{});
  CHECK_FALSE (a.captured ());
  Frame rts;
  rts.kind = FrameKind::Rts;
  rts.size_bytes = 30;
  CHECK_FALSE (a.capture_syn (rts));
  CHECK_FALSE (a.captured ());

  CHECK (a.capture_syn (overheard_syn (3, 1, 1.01)));
  CHECK (a.captured ()->src == 3);

  Frame tokened = overheard_syn (4, 2, 2.01);
  tokened.size_bytes = 18;
  tokened.auth_token = AuthToken{};
  CHECK (a.capture_syn (tokened));
  CHECK (a.captured ()->src == 4);
}

TEST_CASE ("replay copies the latest capture except origin and time")
{
  Attacker a (7, {AttackKind::SynReplay, 0.04, {}, 1.0}, FrameSizes{});
  Rng rng (1);
  CHECK (a.emit (0.5, 0, rng, {}).empty ());
  a.capture_syn (overheard_syn (3, 1, 1.01));
  Frame latest = overheard_syn (5, 2, 2.02);
  latest.auth_token = AuthToken{1, 2, 3};
  latest.size_bytes = 18;
  a.capture_syn (latest);
  const auto out = a.emit (2.5, 2, rng, {});
  REQUIRE (out.size () == 1);
  Frame expect = latest;
  expect.origin = 7;
  expect.sent_at = 2.5;
  CHECK (out[0].kind == expect.kind);
  CHECK (out[0].size_bytes == expect.size_bytes);
  CHECK (out[0].src == expect.src);
  CHECK (out[0].dst == expect.dst);
  CHECK (out[0].sleep_time_field == expect.sleep_time_field);
  CHECK (out[0].auth_token == expect.auth_token);
  CHECK (out[0].cycle == expect.cycle);
  CHECK (out[0].origin == 7);
  CHECK (out[0].sent_at == 2.5);
}

TEST_CASE ("forged SYNs claim another id without a token")
{
  Attacker a (2, {AttackKind::ForgedIdSyn, 0.04, {}, 0.9}, FrameSizes{});
  Rng rng (5);
  const std::vector<NodeId> ids{0, 1, 2, 3};
  for (int i = 0; i < 200; ++i)
    {
      const auto out = a.emit (0.1 * i, 4, rng, ids);
      REQUIRE (out.size () == 1);
      CHECK (out[0].src != 2);
      CHECK (out[0].src <= 3);
      CHECK (out[0].origin == 2);
      CHECK (out[0].sleep_time_field == 0.9);
      CHECK_FALSE (out[0].auth_token);
      CHECK (out[0].size_bytes == 10);
    }
  const std::vector<NodeId> only_self{2};
  CHECK (a.emit (0.0, 0, rng, only_self).empty ());
}

TEST_CASE ("RTS flood addresses every target")
{
  Attacker a (9, {AttackKind::RtsFlood, 0.01, {1, 4, 6}, 1.0}, FrameSizes{});
  Rng rng (1);
  const auto out = a.emit (0.3, 0, rng, {});
  REQUIRE (out.size () == 3);
  CHECK (out[0].dst == 1);
  CHECK (out[1].dst == 4);
  CHECK (out[2].dst == 6);
  for (const auto &f : out)
    {
      CHECK (f.kind == FrameKind::Rts);
      CHECK (f.size_bytes == 30);
      CHECK (f.src == 9);
    }
  CHECK_THROWS_AS (Attacker (1, {AttackKind::RtsFlood, 0.0, {}, 1.0}, FrameSizes{}),
                   std::invalid_argument);
}
