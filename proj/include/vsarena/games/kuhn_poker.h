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

#ifndef VSARENA_GAMES_KUHN_POKER_H_
#define VSARENA_GAMES_KUHN_POKER_H_

#include <array>
#include <string>

#include "vsarena/core/game.h"

namespace vsarena::kuhn {

enum Card : int { kJack = 0, kQueen = 1, kKing = 2 };

inline constexpr char kPass[] = "<PASS>";
inline constexpr char kBet[] = "<BET>";

char CardLetter(int card);

class KuhnState : public State {
 public:
  KuhnState(int card0, int card1);

  std::unique_ptr<State> Clone() const override;
  bool IsTerminal() const override;
  int CurrentAgent() const override;
  std::vector<std::string> LegalActions(int agent) const override;
  Transition Apply(const std::vector<std::string>& joint) override;
  std::string Serialize() const override;

  int card(int agent) const { return cards_[agent]; }
  // Betting history over {'P', 'B'}.
  const std::string& history() const { return history_; }
  int contribution(int agent) const { return contributions_[agent]; }
  int pot() const { return contributions_[0] + contributions_[1]; }
  // Net chips for each agent; zero before the hand ends.
  std::array<double, 2> Returns() const;

 private:
  std::array<int, 2> cards_;
  std::array<int, 2> contributions_{1, 1};
  std::string history_;
};

class KuhnPokerGame : public Game {
 public:
  KuhnPokerGame();
  const GameSpec& spec() const override { return spec_; }
  std::unique_ptr<State> NewInitialState(uint64_t seed) const override;

 private:
  GameSpec spec_;
};

}  // namespace vsarena::kuhn

#endif  // VSARENA_GAMES_KUHN_POKER_H_
