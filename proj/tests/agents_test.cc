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

#include <atomic>
#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "vsarena/agents/baselines.h"
#include "vsarena/agents/factory.h"
#include "vsarena/agents/kuhn_ne.h"
#include "vsarena/agents/positions.h"
#include "vsarena/agents/remote.h"
#include "vsarena/agents/search.h"
#include "vsarena/core/environment.h"
#include "vsarena/core/error.h"
#include "vsarena/core/runner.h"
#include "vsarena/games/dilemmas.h"
#include "vsarena/games/registry.h"
#include "vsarena/verify/verify.h"

namespace vsarena::agents {
namespace {

// Seat-0 expectation by hand-enumerating the betting tree; payoffs come
// from the rules, not the engine.
double TreeValue(const KuhnStrategy& a, const KuhnStrategy& b) {
  double total = 0.0;
  for (int c0 = 0; c0 < 3; ++c0) {
    for (int c1 = 0; c1 < 3; ++c1) {
      if (c0 == c1) continue;
      const double s = c0 > c1 ? 1.0 : -1.0;
      const double open = a.open_bet[c0];
      const double call = b.call_bet[c1];
      const double raise = b.bet_after_pass[c1];
      const double recall = a.call_after_bet[c0];
      double v = open * (call * 2 * s + (1 - call) * 1.0);
      v += (1 - open) * ((1 - raise) * s + raise * (recall * 2 * s + (1 - recall) * -1.0));
      total += v / 6.0;
    }
  }
  return total;
}

TEST_CASE("kuhn equilibrium family is worth -1/18 to the first seat") {
  for (double alpha : {0.0, 1.0 / 6, 1.0 / 3}) {
    CAPTURE(alpha);
    const auto ne = KuhnEquilibrium(alpha);
    CHECK(std::abs(TreeValue(ne, ne) + 1.0 / 18) < 1e-12);
    CHECK(std::abs(KuhnExpectedValue(ne, ne) - TreeValue(ne, ne)) < 1e-12);
    CHECK(ne.open_bet[0] == doctest::Approx(alpha));
    CHECK(ne.open_bet[2] == doctest::Approx(3 * alpha));
    CHECK(ne.call_after_bet[1] == doctest::Approx(alpha + 1.0 / 3));
  }
  CHECK_THROWS_AS(KuhnEquilibrium(0.5), Error);
}

TEST_CASE("a perturbed equilibrium table is exploitable") {
  const auto ok = verify::CheckKuhnEquilibrium({0.0, 1.0 / 6, 1.0 / 3});
  CHECK(ok.passed);
  const auto bad = verify::CheckKuhnEquilibrium({1.0 / 6}, 1e-12, [](double alpha) {
    auto s = KuhnEquilibrium(alpha);
    s.call_bet[1] += 0.05;
    return s;
  });
  CHECK_FALSE(bad.passed);
  CHECK(bad.detail.find("best-response gain") != std::string::npos);
}

TEST_CASE("alpha-beta agrees with plain minimax") {
  Rng rng(4);
  for (int i = 0; i < 40; ++i) {
    std::array<int, 9> cells{};
    TicTacToePosition pos(cells);
    const int plies = static_cast<int>(rng.Uniform(5));
    for (int p = 0; p < plies && !pos.Terminal(); ++p) {
      std::vector<int> moves;
      pos.Moves(moves);
      pos.Play(moves[rng.Uniform(moves.size())]);
    }
    if (pos.Terminal()) continue;
    const auto plain = PlainMinimax(pos, 9);
    const auto fast = AlphaBetaSearch(pos, 9);
    CHECK(plain.move == fast.move);
    CHECK(plain.value == doctest::Approx(fast.value));
    CHECK(fast.nodes <= plain.nodes);
  }
  CHECK_THROWS_AS(AlphaBetaSearch(TicTacToePosition{}, 0), Error);
}

TEST_CASE("perfect tic-tac-toe play never loses") {
  auto game = MakeGame("tic_tac_toe");
  MinimaxPolicy perfect(9);
  RandomPolicy random;
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const auto first = RunEpisode(game, seed, {&perfect, &random});
    CHECK(first.returns[0] >= 0.0);
    const auto second = RunEpisode(game, seed, {&random, &perfect});
    CHECK(second.returns[1] >= 0.0);
  }
  MinimaxPolicy other(9);
  CHECK(RunEpisode(game, 0, {&perfect, &other}).returns[0] == 0.0);
}

TEST_CASE("minimax takes an immediate breakthrough win") {
  breakthrough::Board b;
  b.cells[breakthrough::Square(2, 1)] = breakthrough::kBlack;
  b.cells[breakthrough::Square(6, 6)] = breakthrough::kWhite;
  b.to_move = breakthrough::kBlack;
  BreakthroughPosition pos(b);
  const auto r = AlphaBetaSearch(pos, 3);
  CHECK(breakthrough::RowOf(r.move.to) == 0);
  CHECK(r.value > 1.0);
}

TEST_CASE("mcts is reproducible and legal") {
  Environment env(MakeGame("breakthrough"));
  env.Reset(2);
  MctsPolicy a, b;
  Rng r1(8), r2(8);
  const auto m1 = a.Act(env, 0, r1);
  const auto m2 = b.Act(env, 0, r2);
  CHECK(m1 == m2);
  const auto legal = env.LegalActions(0);
  CHECK(std::find(legal.begin(), legal.end(), m1) != legal.end());
}

TEST_CASE("grid scripts head for their targets") {
  grid::DilemmaConfig config;
  grid::DilemmaState s(config, 0);
  s.SetPlayer(0, {0, 0});
  s.SetPlayer(1, {4, 4});
  s.SetItem(0, {3, 0});  // red coin
  s.SetItem(1, {0, 1});  // blue coin, closer to red
  CHECK(GridScriptAction(GridScript::kOwnColorCoin, s, 0) == grid::kRight);
  CHECK(GridScriptAction(GridScript::kClosestCoin, s, 0) == grid::kDown);

  grid::DilemmaConfig hunt;
  hunt.kind = grid::DilemmaKind::kMonsterHunt;
  grid::DilemmaState h(hunt, 0);
  h.SetPlayer(0, {2, 2});
  CHECK(GridScriptAction(GridScript::kCampCenter, h, 0) == grid::kStay);
  CHECK(GridScriptTarget(GridScript::kCampCorner, h, 0) == grid::Pos{0, 0});
  CHECK(GridScriptNames().size() == 10);
}

TEST_CASE("agent specs parse and validate") {
  const auto list = ParseAgentList("mcts:c=2,sims=50,random");
  REQUIRE(list.size() == 2);
  CHECK(list[0].kind == "mcts");
  CHECK(list[0].params.at("sims") == "50");
  CHECK(list[1].kind == "random");
  CHECK(MakePolicy(ParseAgentSpec("kuhn-ne:alpha=1/6"), "kuhn_poker")->name().find("kuhn") !=
        std::string::npos);
  CHECK(MakePolicy(ParseAgentSpec("ne:alpha=0"), "kuhn_poker") != nullptr);
  CHECK(MakePolicy(ParseAgentSpec("oracle"), "overcooked")->name() == "overcooked-script");
  CHECK(MakePolicy(ParseAgentSpec("random:eps=0.2"), "pong") != nullptr);
  auto config_error = [](const std::string& spec, const std::string& env) {
    try {
      MakePolicy(ParseAgentSpec(spec), env);
    } catch (const Error& e) {
      return e.code() == ErrorCode::kConfig;
    }
    return false;
  };
  CHECK(config_error("minimax:depht=3", "breakthrough"));
  CHECK(config_error("kuhn-ne:alpha=0.9", "kuhn_poker"));
  CHECK(config_error("pong-bot", "hanabi"));
  CHECK(config_error("random:eps=2", "hanabi"));
  CHECK(config_error("teleport", "hanabi"));
}

TEST_CASE("every baseline answers with legal tokens") {
  const auto r = verify::CheckPolicyLegality(400, 5);
  CHECK_MESSAGE(r.passed, r.detail);
}

TEST_CASE("noisy policies keep to the legal set") {
  Environment env(MakeGame("hanabi"));
  env.Reset(3);
  auto p = MakePolicy(ParseAgentSpec("hanabi-heuristic:eps=0.5"), "hanabi");
  Rng rng(1);
  const auto legal = env.LegalActions(0);
  for (int i = 0; i < 50; ++i) {
    const auto token = p->Act(env, 0, rng);
    CHECK(std::find(legal.begin(), legal.end(), token) != legal.end());
  }
}

RemoteConfig StdioConfig(const std::string& reply) {
  RemoteConfig config;
  config.endpoint = "stdio:while read line; do echo '" + reply + "'; done";
  config.timeout_seconds = 5;
  config.max_retries = 1;
  config.mode = ObservationMode::kTextOnly;
  return config;
}

TEST_CASE("remote agent over stdio") {
  Environment env(MakeGame("kuhn_poker"));
  env.Reset(1);
  Rng rng(0);
  auto good = MakePolicy(ParseAgentSpec("remote"), "kuhn_poker",
                         StdioConfig(R"({"token": "<BET>"})"));
  CHECK(good->Act(env, 0, rng) == "<BET>");
  // An illegal reply falls back to a legal token.
  auto config = StdioConfig(R"({"token": "<FOLD>"})");
  RemoteClient client(MakeTransport(config), config);
  RemoteRequest request;
  request.env = "kuhn_poker";
  request.legal = {"<PASS>", "<BET>"};
  const auto token = client.Query(request, rng);
  CHECK((token == "<PASS>" || token == "<BET>"));
  CHECK(client.fallbacks() == 1);
}

TEST_CASE("remote agent over http") {
  httplib::Server server;
  std::atomic<int> hits{0};
  std::string seen_auth;
  nlohmann::json seen;
  server.Post("/act", [&](const httplib::Request& req, httplib::Response& res) {
    ++hits;
    seen_auth = req.get_header_value("Authorization");
    seen = nlohmann::json::parse(req.body);
    res.set_content(nlohmann::json{{"token", seen["legal"][0]}}.dump(), "application/json");
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  std::thread thread([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  RemoteConfig config;
  config.endpoint = "http://127.0.0.1:" + std::to_string(port) + "/act";
  config.api_key = "secret";
  config.timeout_seconds = 5;
  Environment env(MakeGame("overcooked"));
  env.Reset(0);
  Rng rng(0);
  auto policy = MakePolicy(ParseAgentSpec("remote"), "overcooked", config);
  CHECK(policy->Act(env, 1, rng) == env.LegalActions(1)[0]);
  CHECK(hits == 1);
  CHECK(seen_auth == "Bearer secret");
  CHECK(seen["mode"] == "multimodal");
  CHECK(seen["frames"].size() == 1);
  CHECK(seen["kind"] == "act");

  config.mode = ObservationMode::kTextOnly;
  auto text_only = MakePolicy(ParseAgentSpec("remote"), "overcooked", config);
  text_only->Act(env, 1, rng);
  CHECK_FALSE(seen.contains("frames"));
  CHECK(seen["text"].get<std::string>().find("Overcooked") != std::string::npos);

  server.stop();
  thread.join();
}

TEST_CASE("unreachable endpoints fall back after retries") {
  RemoteConfig config;
  config.endpoint = "http://127.0.0.1:1/none";
  config.timeout_seconds = 0.5;
  config.max_retries = 2;
  RemoteClient client(MakeTransport(config), config);
  RemoteRequest request;
  request.legal = {"<UP>"};
  Rng rng(0);
  CHECK(client.Query(request, rng) == "<UP>");
  CHECK(client.fallbacks() == 1);
  CHECK_THROWS_AS(MakeTransport(RemoteConfig{"https://example.com"}), Error);
}

}  // namespace
}  // namespace vsarena::agents
