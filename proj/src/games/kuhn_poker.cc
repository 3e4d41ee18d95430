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

#include "vsarena/games/kuhn_poker.h"

#include <stdexcept>

#include "vsarena/core/error.h"
#include "vsarena/core/rng.h"

namespace vsarena::kuhn {

char CardLetter(int card) {
  static constexpr char kLetters[] = {'J', 'Q', 'K'};
  if (card < 0 || card > 2) throw std::out_of_range("kuhn card");
  return kLetters[card];
}

KuhnState::KuhnState(int card0, int card1) : cards_{card0, card1} {
  if (card0 == card1 || card0 < 0 || card0 > 2 || card1 < 0 || card1 > 2) {
    throw Error(ErrorCode::kInvalidArgument, "kuhn: invalid deal");
  }
}

std::unique_ptr<State> KuhnState::Clone() const {
  return std::make_unique<KuhnState>(*this);
}

bool KuhnState::IsTerminal() const {
  return history_ == "PP" || history_ == "BB" || history_ == "BP" ||
         history_ == "PBB" || history_ == "PBP";
}

int KuhnState::CurrentAgent() const {
  if (IsTerminal()) return kTerminalAgent;
  return static_cast<int>(history_.size() % 2);
}

std::vector<std::string> KuhnState::LegalActions(int agent) const {
  if (IsTerminal()) return {};
  if (agent != CurrentAgent()) return {kNoopToken};
  return {kPass, kBet};
}

std::array<double, 2> KuhnState::Returns() const {
  if (!IsTerminal()) return {0.0, 0.0};
  int winner;
  if (history_ == "BP") {
    winner = 0;
  } else if (history_ == "PBP") {
    winner = 1;
  } else {
    winner = cards_[0] > cards_[1] ? 0 : 1;
  }
  const int loser = 1 - winner;
  std::array<double, 2> r{};
  r[winner] = contributions_[loser];
  r[loser] = -contributions_[loser];
  return r;
}

Transition KuhnState::Apply(const std::vector<std::string>& joint) {
  const int mover = CurrentAgent();
  const std::string& token = joint.at(mover);
  if (token == kBet) {
    history_ += 'B';
    contributions_[mover] += 1;
  } else {
    history_ += 'P';
  }
  ++step_index_;
  Transition t;
  t.rewards = {0.0, 0.0};
  if (IsTerminal()) {
    auto r = Returns();
    t.rewards = {r[0], r[1]};
    const int winner = r[0] > 0 ? 0 : 1;
    const bool fold = history_ == "BP" || history_ == "PBP";
    t.events.push_back({fold ? "fold-win" : "showdown-win", {winner}});
  }
  return t;
}

std::string KuhnState::Serialize() const {
  std::string s = "kuhn cards=";
  s += CardLetter(cards_[0]);
  s += CardLetter(cards_[1]);
  s += " history=" + history_;
  s += " pot=" + std::to_string(pot());
  return s;
}

KuhnPokerGame::KuhnPokerGame() {
  spec_.name = "kuhn_poker";
  spec_.num_agents = 2;
  spec_.interaction = InteractionClass::kCompetitive;
  spec_.max_steps = 3;
  spec_.history_depth = 1;
  spec_.action_vocabulary = {{kPass, kBet, kNoopToken}, {kPass, kBet, kNoopToken}};
}

std::unique_ptr<State> KuhnPokerGame::NewInitialState(uint64_t seed) const {
  Rng deal(seed, rng_stream::kDeal);
  std::vector<int> deck = {kJack, kQueen, kKing};
  deal.Shuffle(deck);
  return std::make_unique<KuhnState>(deck[0], deck[1]);
}

}  // namespace vsarena::kuhn
