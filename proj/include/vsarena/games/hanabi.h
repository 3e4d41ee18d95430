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

#ifndef VSARENA_GAMES_HANABI_H_
#define VSARENA_GAMES_HANABI_H_

#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "vsarena/core/game.h"

namespace vsarena::hanabi {

struct HanabiConfig {
  std::string color_letters = "RYGWB";
  int num_ranks = 5;
  // Copies of each rank per color, rank 1 first.
  std::vector<int> rank_counts = {3, 2, 2, 2, 1};
  int hand_size = 5;
  int max_info_tokens = 8;
  int max_life_tokens = 3;

  int num_colors() const { return static_cast<int>(color_letters.size()); }
  int deck_size() const;
  int max_score() const { return num_colors() * num_ranks; }

  static HanabiConfig Full();
  // Two colors, three ranks, hands of three.
  static HanabiConfig Tiny();
};

struct Card {
  int color = 0;  // index into color_letters
  int rank = 1;   // 1-based
  bool operator==(const Card&) const = default;
};

// What the holder has been told about one of their cards.
struct CardKnowledge {
  uint32_t colors = 0;  // bit c set: color c still possible
  uint32_t ranks = 0;   // bit r-1 set: rank r still possible
  bool operator==(const CardKnowledge&) const = default;
};

enum class MoveType { kPlay, kDiscard, kRevealColor, kRevealRank };

struct HanabiMove {
  MoveType type = MoveType::kPlay;
  // Hand slot for play/discard; color index or rank for reveals.
  int value = 0;
};

std::string MoveToToken(const HanabiMove& move, const HanabiConfig& config);
std::optional<HanabiMove> ParseToken(const std::string& token,
                                     const HanabiConfig& config);

class HanabiState : public State {
 public:
  HanabiState(const HanabiConfig& config, std::vector<Card> deck);

  std::unique_ptr<State> Clone() const override;
  bool IsTerminal() const override { return terminal_; }
  int CurrentAgent() const override;
  std::vector<std::string> LegalActions(int agent) const override;
  Transition Apply(const std::vector<std::string>& joint) override;
  std::string Serialize() const override;

  const HanabiConfig& config() const { return config_; }
  const std::vector<Card>& hand(int agent) const { return hands_[agent]; }
  const std::vector<CardKnowledge>& knowledge(int agent) const {
    return knowledge_[agent];
  }
  const std::vector<Card>& deck() const { return deck_; }
  const std::vector<Card>& discard_pile() const { return discards_; }
  const std::vector<int>& fireworks() const { return fireworks_; }
  int info_tokens() const { return info_tokens_; }
  int life_tokens() const { return life_tokens_; }
  // Turns left once the deck is exhausted; -1 before that.
  int final_round_counter() const { return final_round_counter_; }
  // Each agent's most recent actions, oldest first, at most two.
  const std::deque<std::string>& recent_actions(int agent) const {
    return recent_actions_[agent];
  }
  int FireworkSum() const;
  bool LivesExhausted() const { return life_tokens_ == 0; }
  std::vector<HanabiMove> LegalMoves() const;

  // Deck, hands, discards and played fireworks together form exactly the
  // configured multiset.
  bool CardsConserved() const;

 private:
  void Draw(int agent);
  void RecordAction(int agent, const std::string& text);

  HanabiConfig config_;
  std::vector<Card> deck_;  // drawn from the back
  std::array<std::vector<Card>, 2> hands_;
  std::array<std::vector<CardKnowledge>, 2> knowledge_;
  std::vector<int> fireworks_;
  std::vector<Card> discards_;
  std::array<std::deque<std::string>, 2> recent_actions_;
  int info_tokens_;
  int life_tokens_;
  int current_ = 0;
  int final_round_counter_ = -1;
  bool terminal_ = false;
};

std::vector<Card> FullDeck(const HanabiConfig& config);

class HanabiGame : public Game {
 public:
  explicit HanabiGame(HanabiConfig config, std::string name = "hanabi");
  const GameSpec& spec() const override { return spec_; }
  std::unique_ptr<State> NewInitialState(uint64_t seed) const override;
  const HanabiConfig& config() const { return config_; }

 private:
  HanabiConfig config_;
  GameSpec spec_;
};

struct HanabiReturns {
  // Zero when every life token was lost, else the firework sum.
  double standard = 0.0;
  // Firework sum regardless of how the game ended.
  double firework = 0.0;
};

// Requires a terminal state.
HanabiReturns ComputeReturns(const HanabiState& state);

}  // namespace vsarena::hanabi

#endif  // VSARENA_GAMES_HANABI_H_
