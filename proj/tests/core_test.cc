// Copyright 2026 The VS-Arena Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <set>

#include "doctest.h"
#include "vsarena/agents/baselines.h"
#include "vsarena/core/environment.h"
#include "vsarena/core/error.h"
#include "vsarena/core/rng.h"
#include "vsarena/core/runner.h"
#include "vsarena/games/registry.h"

namespace vsarena {
namespace {

TEST_CASE("rng streams are reproducible and independent") {
  Rng a(42, 1), b(42, 1), c(42, 2);
  std::vector<uint64_t> xa, xb, xc;
  for (int i = 0; i < 16; ++i) {
    xa.push_back(a.Next());
    xb.push_back(b.Next());
    xc.push_back(c.Next());
  }
  CHECK(xa == xb);
  CHECK(xa != xc);
  Rng r(7);
  for (int i = 0; i < 1000; ++i) {
    CHECK(r.Uniform(5) < 5);
    const auto v = r.UniformInt(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
  }
  CHECK(MixSeed(1, 2) != MixSeed(1, 3));
}

TEST_CASE("categorical draws follow the weights") {
  Rng r(3);
  const std::vector<double> w = {1.0, 0.0, 3.0};
  std::array<int, 3> counts{};
  for (int i = 0; i < 8000; ++i) ++counts[r.Categorical(w)];
  CHECK(counts[1] == 0);
  CHECK(counts[2] / 8000.0 == doctest::Approx(0.75).epsilon(0.03));
}

TEST_CASE("environment rejects illegal and post-terminal actions") {
  Environment env(MakeGame("kuhn_poker"));
  env.Reset(5);
  CHECK(env.LegalActions(1) == std::vector<std::string>{kNoopToken});
  try {
    env.Step({"<RAISE>", kNoopToken});
    FAIL("illegal action accepted");
  } catch (const IllegalActionError& e) {
    CHECK(e.code() == ErrorCode::kIllegalAction);
    CHECK(e.agent() == 0);
    CHECK(e.token() == "<RAISE>");
    CHECK(e.legal().size() == 2);
  }
  CHECK(env.step_index() == 0);
  env.Step({"<PASS>", kNoopToken});
  env.Step({kNoopToken, "<PASS>"});
  REQUIRE(env.IsTerminal());
  try {
    env.Step({kNoopToken, kNoopToken});
    FAIL("step after the end accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTerminalState);
  }
}

TEST_CASE("frame history repeats the first frame before it fills") {
  Environment env(MakeGame("pong"));
  env.Reset(1);
  const auto first = env.ObserveFrames(1, 4);
  REQUIRE(first.size() == 4);
  CHECK(first[0] == first[3]);
  for (int i = 0; i < 5; ++i) env.Step({"<UP>", "<DOWN>"});
  const auto later = env.ObserveFrames(1, 4);
  CHECK(later.size() == 4);
  CHECK(later[3] != first[3]);
}

TEST_CASE("returns equal summed step rewards and replays match") {
  agents::RandomPolicy a, b;
  for (const auto& name : RegisteredGames()) {
    CAPTURE(name);
    auto game = MakeGame(name);
    const Trajectory t = RunEpisode(game, 11, {&a, &b});
    std::vector<double> sums(2, 0.0);
    for (const auto& s : t.steps) {
      sums[0] += s.rewards[0];
      sums[1] += s.rewards[1];
    }
    CHECK(sums[0] == doctest::Approx(t.returns[0]));
    CHECK(sums[1] == doctest::Approx(t.returns[1]));
    CHECK(t.terminal);
    const Trajectory r = Replay(game, 11, t.ActionList(), t.participants);
    CHECK(ToJsonl(r, "T") == ToJsonl(t, "T"));
  }
}

TEST_CASE("trajectory JSONL round-trips") {
  agents::RandomPolicy a, b;
  auto game = MakeGame("coin_dilemma");
  RunOptions options;
  options.record_observations = true;
  const Trajectory t = RunEpisode(game, 3, {&a, &b}, options);
  const std::string text = ToJsonl(t, "2026-01-01T00:00:00Z");
  const Trajectory back = FromJsonl(text);
  CHECK(back.seed == t.seed);
  CHECK(back.returns == t.returns);
  CHECK(back.steps.size() == t.steps.size());
  CHECK(back.ActionList() == t.ActionList());
  CHECK(ToJsonl(back, "2026-01-01T00:00:00Z") == text);
  // One header, one record per step, one summary.
  CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(t.steps.size()) + 2);
}

TEST_CASE("timestamps are ISO-8601 UTC") {
  const std::string ts = IsoTimestampNow();
  CHECK(ts.size() >= 20);
  CHECK(ts[4] == '-');
  CHECK(ts[10] == 'T');
  CHECK(ts.back() == 'Z');
}

}  // namespace
}  // namespace vsarena
