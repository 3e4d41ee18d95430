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

#ifndef VSARENA_GAMES_DILEMMAS_H_
#define VSARENA_GAMES_DILEMMAS_H_

#include <array>
#include <map>
#include <string>
#include <vector>

#include "vsarena/core/game.h"
#include "vsarena/core/rng.h"
#include "vsarena/games/grid_common.h"

namespace vsarena::grid {

enum class DilemmaKind { kCoinDilemma, kMonsterHunt, kBattleOfColors };

inline constexpr int kRed = 0;
inline constexpr int kBlue = 1;

const char* AgentColorName(int agent);

// Reward rows keyed by event tag: "<kind>/<red|blue>" for single-actor
// events, "<kind>" for joint ones.
using RewardTable = std::map<std::string, std::array<double, 2>>;

RewardTable DefaultRewardTable(DilemmaKind kind);
std::string TableKey(const GameEvent& event);
// Human-readable description of an event row, used by renderers.
std::string RowDescription(const std::string& key);

struct DilemmaConfig {
  DilemmaKind kind = DilemmaKind::kCoinDilemma;
  int width = 5;
  int height = 5;
  int horizon = 50;
  Pos center{2, 2};
  RewardTable rewards;
};

class DilemmaState : public State {
 public:
  DilemmaState(const DilemmaConfig& config, uint64_t seed);

  std::unique_ptr<State> Clone() const override;
  bool IsTerminal() const override;
  int CurrentAgent() const override { return IsTerminal() ? kTerminalAgent : kSimultaneousAgents; }
  std::vector<std::string> LegalActions(int agent) const override;
  Transition Apply(const std::vector<std::string>& joint) override;
  std::string Serialize() const override;

  const DilemmaConfig& config() const { return config_; }
  DilemmaKind kind() const { return config_.kind; }
  Pos player(int agent) const { return players_[agent]; }
  // Coins and blocks: index kRed / kBlue. Apples: two interchangeable items.
  const std::array<Pos, 2>& items() const { return items_; }
  Pos monster() const { return monster_; }
  // Occurrence count per reward-table key.
  const std::map<std::string, int>& counters() const { return counters_; }

  // Where `agent` would stand after `dir` (off-grid moves stay in place).
  Pos Resolve(int agent, Dir dir) const;
  // The monster's next cell given player positions (nearest player by
  // Manhattan distance, red on ties, horizontal axis first).
  Pos MonsterStep(Pos monster, Pos red, Pos blue) const;

  // Test hooks for constructing specific positions.
  void SetPlayer(int agent, Pos p) { players_[agent] = p; }
  void SetItem(int index, Pos p) { items_[index] = p; }
  void SetMonster(Pos p) { monster_ = p; }

 private:
  bool InBounds(Pos p) const;
  Pos RandomFreeCell(const std::vector<Pos>& occupied);
  std::vector<Pos> Occupied() const;
  void Emit(Transition& t, GameEvent event);

  DilemmaConfig config_;
  std::array<Pos, 2> players_{};
  std::array<Pos, 2> items_{};
  Pos monster_{};
  std::map<std::string, int> counters_;
  Rng respawn_;
};

class DilemmaGame : public Game {
 public:
  explicit DilemmaGame(DilemmaConfig config);
  const GameSpec& spec() const override { return spec_; }
  std::unique_ptr<State> NewInitialState(uint64_t seed) const override;
  nlohmann::json params() const override;
  const DilemmaConfig& config() const { return config_; }

 private:
  DilemmaConfig config_;
  GameSpec spec_;
};

const char* DilemmaName(DilemmaKind kind);

}  // namespace vsarena::grid

#endif  // VSARENA_GAMES_DILEMMAS_H_
