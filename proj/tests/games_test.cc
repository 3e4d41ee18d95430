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

#include <map>
#include <set>

#include "doctest.h"
#include "vsarena/core/environment.h"
#include "vsarena/core/error.h"
#include "vsarena/games/breakthrough.h"
#include "vsarena/games/dilemmas.h"
#include "vsarena/games/hanabi.h"
#include "vsarena/games/kuhn_poker.h"
#include "vsarena/games/overcooked.h"
#include "vsarena/games/pong.h"
#include "vsarena/games/registry.h"
#include "vsarena/games/tic_tac_toe.h"

namespace vsarena {
namespace {

// Plays turn-based tokens, filling the waiting seat with the no-op.
Transition PlayTurn(State& s, const std::string& token) {
  std::vector<std::string> joint(2, kNoopToken);
  joint[s.CurrentAgent()] = token;
  return s.Apply(joint);
}

TEST_CASE("registry resolves aliases and rejects unknown names") {
  CHECK(CanonicalGameName("kuhn") == "kuhn_poker");
  CHECK(CanonicalGameName("coin") == "coin_dilemma");
  CHECK(CanonicalGameName("battle") == "battle_of_colors");
  CHECK(CanonicalGameName("hunt") == "monster_hunt");
  try {
    MakeGame("chess");
    FAIL("unknown env accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnknownEnvironment);
    CHECK(std::string(e.what()).find("breakthrough") != std::string::npos);
  }
  CHECK_THROWS_AS(MakeGame("pong", {{"paddle_colour", 3}}), Error);
  CHECK(MakeGame("overcooked", {{"horizon", 20}})->spec().max_steps == 20);
  CHECK(BenchmarkGames().size() == 8);
}

TEST_CASE("interaction classes") {
  CHECK(MakeGame("hanabi")->spec().interaction == InteractionClass::kCooperative);
  CHECK(MakeGame("overcooked")->spec().interaction == InteractionClass::kCooperative);
  CHECK(MakeGame("breakthrough")->spec().interaction == InteractionClass::kCompetitive);
  CHECK(MakeGame("kuhn_poker")->spec().interaction == InteractionClass::kCompetitive);
  CHECK(MakeGame("pong")->spec().interaction == InteractionClass::kCompetitive);
  CHECK(MakeGame("coin_dilemma")->spec().interaction == InteractionClass::kMixed);
  CHECK(MakeGame("monster_hunt")->spec().interaction == InteractionClass::kMixed);
  CHECK(MakeGame("battle_of_colors")->spec().interaction == InteractionClass::kMixed);
}

TEST_CASE("kuhn payoffs for every deal and betting line") {
  // Net chips for seat 0, written out from the rules: ante 1, bet 1.
  auto expected = [](int c0, int c1, const std::string& line) {
    const double high = c0 > c1 ? 1.0 : -1.0;
    if (line == "PP") return high;
    if (line == "BP") return 1.0;
    if (line == "PBP") return -1.0;
    return 2.0 * high;  // BB, PBB
  };
  for (int c0 = 0; c0 < 3; ++c0) {
    for (int c1 = 0; c1 < 3; ++c1) {
      if (c0 == c1) continue;
      for (std::string line : {"PP", "BP", "PBP", "BB", "PBB"}) {
        CAPTURE(c0);
        CAPTURE(c1);
        CAPTURE(line);
        kuhn::KuhnState s(c0, c1);
        double r0 = 0.0, r1 = 0.0;
        for (char c : line) {
          REQUIRE_FALSE(s.IsTerminal());
          const auto t = PlayTurn(s, c == 'B' ? kuhn::kBet : kuhn::kPass);
          r0 += t.rewards[0];
          r1 += t.rewards[1];
        }
        CHECK(s.IsTerminal());
        CHECK(s.history() == line);
        CHECK(r0 == expected(c0, c1, line));
        CHECK(r1 == -r0);
      }
    }
  }
}

TEST_CASE("kuhn deals cover all six permutations") {
  auto game = MakeGame("kuhn_poker");
  std::set<std::pair<int, int>> deals;
  for (uint64_t seed = 0; seed < 200; ++seed) {
    auto s = game->NewInitialState(seed);
    const auto& k = dynamic_cast<const kuhn::KuhnState&>(*s);
    CHECK(k.card(0) != k.card(1));
    deals.insert({k.card(0), k.card(1)});
  }
  CHECK(deals.size() == 6);
}

TEST_CASE("tic-tac-toe lines") {
  tictactoe::TicTacToeState s;
  for (const char* m : {"0", "3", "1", "4"}) PlayTurn(s, m);
  CHECK_FALSE(s.IsTerminal());
  const auto t = PlayTurn(s, "2");
  CHECK(s.IsTerminal());
  CHECK(s.Winner() == 0);
  CHECK(t.rewards[0] == 1.0);
  CHECK(t.rewards[1] == -1.0);
}

TEST_CASE("breakthrough opening and move syntax") {
  using namespace breakthrough;
  const Board b = Board::Initial();
  CHECK(b.Count(kWhite) == 16);
  CHECK(b.Count(kBlack) == 16);
  // Two edge pawns with two moves, six inner pawns with three.
  CHECK(b.LegalMoves().size() == 22);
  BreakthroughState s;
  CHECK(s.CurrentAgent() == 0);
  CHECK(s.LegalActions(1) == std::vector<std::string>{kNoopToken});
  PlayTurn(s, "a7a6");
  // White pawn on a2 advances one row.
  const auto legal = s.LegalActions(1);
  CHECK(std::find(legal.begin(), legal.end(), "a2a3") != legal.end());
  CHECK(std::find(legal.begin(), legal.end(), "a2a4") == legal.end());
  PlayTurn(s, "a2a3");
  CHECK(s.board().cells[Square(0, 2)] == kWhite);
  CHECK(s.board().cells[Square(0, 1)] == kEmpty);
  CHECK(ParseMove("a2a3").has_value());
  CHECK_FALSE(ParseMove("z9a3").has_value());
}

TEST_CASE("breakthrough captures are diagonal only and reaching home wins") {
  using namespace breakthrough;
  Board b;
  b.cells[Square(3, 3)] = kWhite;
  b.cells[Square(3, 4)] = kBlack;  // blocks straight ahead
  b.cells[Square(4, 4)] = kBlack;  // capturable
  b.cells[Square(0, 6)] = kWhite;
  b.to_move = kWhite;
  const auto moves = b.LegalMoves();
  std::set<std::string> tokens;
  for (auto m : moves) tokens.insert(MoveToString(m));
  CHECK(tokens.count("d4d5") == 0);
  CHECK(tokens.count("d4e5") == 1);
  CHECK(tokens.count("d4c5") == 1);
  b.Play(*ParseMove("a7a8"));
  CHECK(b.winner == kWhite);
}

TEST_CASE("hanabi deck, tokens and moves") {
  using namespace hanabi;
  const auto full = HanabiConfig::Full();
  CHECK(FullDeck(full).size() == 50);
  CHECK(full.max_score() == 25);
  const auto tiny = HanabiConfig::Tiny();
  CHECK(FullDeck(tiny).size() == 12);
  for (const char* token : {"<PLAY 0>", "<DISCARD 4>", "<REVEAL color R>", "<REVEAL rank 3>"}) {
    const auto move = ParseToken(token, full);
    REQUIRE(move.has_value());
    CHECK(MoveToToken(*move, full) == token);
  }
  CHECK_FALSE(ParseToken("<REVEAL color Q>", full).has_value());
}

TEST_CASE("hanabi hints cost a token and misplays cost a life") {
  using namespace hanabi;
  const auto config = HanabiConfig::Full();
  auto deck = FullDeck(config);  // unshuffled: drawn from the back
  HanabiState s(config, deck);
  CHECK(s.info_tokens() == 8);
  CHECK(s.life_tokens() == 3);
  CHECK(s.hand(0).size() == 5);
  // Discarding with full tokens is allowed but the count stays capped.
  {
    HanabiState c(config, deck);
    PlayTurn(c, "<DISCARD 0>");
    CHECK(c.info_tokens() == 8);
    CHECK(c.discard_pile().size() == 1);
  }
  const Card target = s.hand(1)[0];
  PlayTurn(s, MoveToToken({MoveType::kRevealRank, target.rank}, config));
  CHECK(s.info_tokens() == 7);
  CHECK(s.knowledge(1)[0].ranks == (1u << (target.rank - 1)));
  // Find a card in agent 1's hand that cannot be played yet.
  int bad = -1;
  for (size_t i = 0; i < s.hand(1).size(); ++i) {
    if (s.hand(1)[i].rank != 1) bad = static_cast<int>(i);
  }
  if (bad >= 0) {
    const auto t = PlayTurn(s, MoveToToken({MoveType::kPlay, bad}, config));
    CHECK(s.life_tokens() == 2);
    CHECK(t.rewards[0] == 0.0);
    CHECK(s.discard_pile().size() == 1);
  }
  CHECK(s.CardsConserved());
}

TEST_CASE("overcooked pickup, pot and delivery") {
  using namespace overcooked;
  OvercookedState s(OvercookedConfig{});
  const auto& runner = s.chef(1);
  CHECK(runner.pos == grid::Pos{3, 1});
  s.Apply({grid::kStay, grid::kRight});  // face the onion crate
  auto t = s.Apply({grid::kStay, grid::kInteract});
  CHECK(s.chef(1).held == Item::kOnion);
  CHECK(t.rewards[0] == 0.0);
  s.Apply({grid::kStay, grid::kLeft});
  CHECK(s.chef(1).pos == grid::Pos{2, 1});
  s.Apply({grid::kStay, grid::kUp});  // face the pot
  t = s.Apply({grid::kStay, grid::kInteract});
  CHECK(s.pots()[0].onions == 1);
  CHECK(t.rewards[0] == 2.0);
  CHECK(t.rewards[1] == 2.0);

  // A cooked three-onion soup plated and served pays plate plus delivery.
  OvercookedState d(OvercookedConfig{});
  d.mutable_pot(0) = Pot{{2, 0}, 3, false, 0, true};
  auto& chef = d.mutable_chef(1);
  chef.pos = {2, 1};
  chef.facing = grid::Dir::kUp;
  chef.held = Item::kDish;
  t = d.Apply({grid::kStay, grid::kInteract});
  CHECK(d.chef(1).held == Item::kSoup);
  CHECK(t.rewards[0] == 2.0);
  d.mutable_chef(1).pos = {3, 2};
  d.mutable_chef(1).facing = grid::Dir::kDown;
  t = d.Apply({grid::kStay, grid::kInteract});
  CHECK(t.rewards[0] == 10.0);
  CHECK(d.deliveries() == 1);
}

TEST_CASE("overcooked chefs cannot share or swap cells") {
  using namespace overcooked;
  OvercookedState s(OvercookedConfig{});
  s.mutable_chef(0).pos = {1, 1};
  s.mutable_chef(1).pos = {2, 1};
  s.Apply({grid::kRight, grid::kLeft});
  CHECK(s.chef(0).pos == grid::Pos{1, 1});
  CHECK(s.chef(1).pos == grid::Pos{2, 1});
}

TEST_CASE("pong scoring and bounds") {
  using namespace pong;
  PongState s(PongConfig{}, 9);
  s.SetPaddle(kLeft, 0);
  s.SetBall({12, 150, -2, 0});
  Transition t;
  int steps = 0;
  while (t.events.empty() && steps < 20) {
    t = s.Apply({kStay, kStay});
    ++steps;
  }
  REQUIRE(t.events.size() == 1);
  CHECK(t.events[0].kind == "point");
  CHECK(s.score(kRight) == 1);
  CHECK(t.rewards[kRight] == 1.0);
  CHECK(t.rewards[kLeft] == -1.0);

  // A ball aimed at the middle of the paddle comes back.
  PongState r(PongConfig{}, 9);
  r.SetPaddle(kLeft, 100);
  r.SetBall({16, 106, -2, 0});
  for (int i = 0; i < 6; ++i) r.Apply({kStay, kStay});
  CHECK(r.ball().vx > 0);
  CHECK(r.score(kRight) == 0);
}

TEST_CASE("pong bounce bands") {
  pong::PongState s(pong::PongConfig{}, 0);
  CHECK(s.BounceSpeed(100, 100, 1) == -3);
  CHECK(s.BounceSpeed(115, 100, 1) == 3);
  CHECK(s.BounceSpeed(108, 100, -2) == -1);
  CHECK(s.BounceSpeed(108, 100, 2) == 1);
}

grid::DilemmaState Place(grid::DilemmaKind kind, grid::Pos red, grid::Pos blue,
                         grid::Pos item0, grid::Pos item1, grid::Pos monster = {4, 4}) {
  grid::DilemmaConfig config;
  config.kind = kind;
  grid::DilemmaState s(config, 1);
  s.SetPlayer(0, red);
  s.SetPlayer(1, blue);
  s.SetItem(0, item0);
  s.SetItem(1, item1);
  if (kind == grid::DilemmaKind::kMonsterHunt) s.SetMonster(monster);
  return s;
}

TEST_CASE("coin dilemma rewards") {
  using namespace grid;
  auto s = Place(DilemmaKind::kCoinDilemma, {0, 0}, {4, 4}, {1, 0}, {4, 0});
  auto t = s.Apply({kRight, kStay});
  CHECK(t.rewards == std::vector<double>{1, 0});
  s = Place(DilemmaKind::kCoinDilemma, {0, 0}, {4, 4}, {3, 3}, {1, 0});
  t = s.Apply({kRight, kStay});
  CHECK(t.rewards == std::vector<double>{1, -2});
  CHECK(s.counters().at("cross-coin/red") == 1);
}

TEST_CASE("monster hunt rewards") {
  using namespace grid;
  // Both step onto the monster's cell together.
  auto s = Place(DilemmaKind::kMonsterHunt, {1, 2}, {3, 2}, {0, 0}, {4, 0}, {2, 2});
  auto t = s.Apply({kRight, kLeft});
  CHECK(t.rewards == std::vector<double>{5, 5});
  // Red alone.
  s = Place(DilemmaKind::kMonsterHunt, {1, 2}, {4, 4}, {0, 0}, {4, 0}, {2, 2});
  t = s.Apply({kRight, kStay});
  CHECK(t.rewards == std::vector<double>{-2, 0});
  // Apple.
  s = Place(DilemmaKind::kMonsterHunt, {0, 1}, {4, 4}, {0, 0}, {4, 0}, {2, 4});
  t = s.Apply({kUp, kStay});
  CHECK(t.rewards[0] == 2);
}

TEST_CASE("battle of the colors rewards") {
  using namespace grid;
  auto s = Place(DilemmaKind::kBattleOfColors, {0, 0}, {2, 0}, {1, 0}, {4, 4});
  auto t = s.Apply({kRight, kLeft});
  CHECK(t.rewards == std::vector<double>{2, 1});
  s = Place(DilemmaKind::kBattleOfColors, {0, 0}, {4, 3}, {1, 0}, {4, 4});
  t = s.Apply({kRight, kDown});
  CHECK(t.rewards == std::vector<double>{0, 0});
  CHECK(t.events.size() == 1);
  CHECK(t.events[0].kind == "block-mismatch");
}

TEST_CASE("dilemma moves off the board stay put") {
  using namespace grid;
  auto s = Place(DilemmaKind::kCoinDilemma, {0, 0}, {4, 4}, {2, 2}, {3, 3});
  s.Apply({kUp, kRight});
  CHECK(s.player(0) == Pos{0, 0});
  CHECK(s.player(1) == Pos{4, 4});
}

}  // namespace
}  // namespace vsarena
