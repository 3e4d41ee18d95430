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

#include <cmath>

#include "doctest.h"
#include "vsarena/agents/baselines.h"
#include "vsarena/core/error.h"
#include "vsarena/core/runner.h"
#include "vsarena/eval/eval.h"
#include "vsarena/games/registry.h"

namespace vsarena::eval {
namespace {

TEST_CASE("normalization") {
  CHECK(Normalize(13.6, 0.0, 24.0) == doctest::Approx(56.6667).epsilon(1e-4));
  CHECK(Normalize(7.0, 0.2, 40.0) == doctest::Approx(17.0854).epsilon(1e-4));
  CHECK(Normalize(0.2, 0.2, 40.0) == 0.0);
  CHECK(Normalize(40.0, 0.2, 40.0) == 100.0);
  CHECK_THROWS_AS(Normalize(1.5, 1.5, 1.5), Error);
}

TEST_CASE("summaries use the population deviation") {
  const auto s = Summarize({1.0, 2.0, 3.0, 4.0});
  CHECK(s.mean == 2.5);
  CHECK(s.std == doctest::Approx(std::sqrt(1.25)));
  CHECK(s.n == 4);
  CHECK(Summarize({}).n == 0);
}

TEST_CASE("protocols") {
  const auto board = DefaultProtocol("breakthrough");
  CHECK(board.opponent_kind == OpponentKind::kFixed);
  CHECK(board.seats == std::vector<int>{0, 1});
  CHECK(board.games_per_seat == 10);
  const auto kuhn = DefaultProtocol("kuhn_poker");
  CHECK(kuhn.runs == 10);
  CHECK(kuhn.games_per_run == 120);
  CHECK(DefaultProtocol("hanabi").opponent_kind == OpponentKind::kSelfPlay);
  CHECK(DefaultProtocol("pong").opponent == "pong-bot");
  for (const auto& env : BenchmarkGames()) {
    CAPTURE(env);
    const auto refs = DefaultReferences(env);
    CHECK(refs.metrics.count(env == "pong" ? "score" : "return") == 1);
  }
}

TEST_CASE("scripted overcooked pair is the 100-point reference") {
  const auto report = RunProtocol(DefaultProtocol("overcooked"), "scripted-oracle",
                                  DefaultReferences("overcooked"));
  CHECK(report.completed == 10);
  CHECK(report.raw.mean == 40.0);
  CHECK(report.normalized.mean == doctest::Approx(100.0));
  const auto j = report.ToJson();
  CHECK(j["references"]["return"]["optimal"] == 40.0);
  CHECK(report.ToTable().find("overcooked") != std::string::npos);
}

TEST_CASE("random pong sits near zero") {
  EvalOptions options;
  options.episodes = 200;
  options.seed = 12;
  const auto report = RunProtocol(DefaultProtocol("pong"), "random", DefaultReferences("pong"),
                                  options);
  CHECK(std::abs(report.normalized.mean) < 15.0);
  CHECK(report.raw_metrics.count("step") == 1);
}

TEST_CASE("random hanabi: standard 0, firework near the published 1.2") {
  EvalOptions options;
  options.episodes = 100;
  const auto report =
      RunProtocol(DefaultProtocol("hanabi"), "random", DefaultReferences("hanabi"), options);
  CHECK(report.raw_metrics.at("return").mean == 0.0);
  CHECK(std::abs(report.raw_metrics.at("firework").mean - 1.2) <= 0.8);
}

TEST_CASE("kuhn runs are seat-balanced") {
  EvalOptions options;
  options.seed = 1;
  const auto report = RunProtocol(DefaultProtocol("kuhn_poker"), "kuhn-ne:alpha=1/3",
                                  DefaultReferences("kuhn_poker"), options);
  CHECK(report.completed == 1200);
  CHECK(report.raw.n == 10);
  CHECK(std::abs(report.raw.mean) < 0.25);
}

TEST_CASE("workers do not change results") {
  EvalOptions one, four;
  one.episodes = four.episodes = 8;
  one.seed = four.seed = 5;
  four.workers = 4;
  const auto a = RunProtocol(DefaultProtocol("coin_dilemma"), "random",
                             DefaultReferences("coin_dilemma"), one);
  const auto b = RunProtocol(DefaultProtocol("coin_dilemma"), "random",
                             DefaultReferences("coin_dilemma"), four);
  CHECK(a.raw.mean == b.raw.mean);
  CHECK(a.seeds == b.seeds);
}

TEST_CASE("behavior counters rebuild returns") {
  agents::RandomPolicy a, b;
  for (const char* env : {"coin_dilemma", "monster_hunt", "battle_of_colors"}) {
    const auto t = RunEpisode(MakeGame(env), 6, {&a, &b});
    const auto rebuilt = ReturnsFromCounters(t);
    CHECK(rebuilt[0] == doctest::Approx(t.returns[0]));
    CHECK(rebuilt[1] == doctest::Approx(t.returns[1]));
    const auto counters = BehaviorCounters(t);
    for (const auto& step : t.steps) {
      for (const auto& e : step.events) CHECK(counters.at(e.kind) > 0);
    }
  }
}

TEST_CASE("policy failures abort only their episode") {
  EvalOptions options;
  options.episodes = 2;
  options.remote.endpoint = "http://127.0.0.1:1/x";
  options.remote.timeout_seconds = 0.2;
  options.remote.max_retries = 0;
  const auto report = RunProtocol(DefaultProtocol("kuhn_poker"), "remote",
                                  DefaultReferences("kuhn_poker"), options);
  // Unreachable agents fall back to uniform moves, so games still finish.
  CHECK(report.aborted == 0);
  CHECK_THROWS_AS(RunProtocol(DefaultProtocol("kuhn_poker"), "minimax:depth=2",
                              DefaultReferences("kuhn_poker"), options),
                  Error);
}

}  // namespace
}  // namespace vsarena::eval
