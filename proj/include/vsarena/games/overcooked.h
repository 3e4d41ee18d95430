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

#ifndef VSARENA_GAMES_OVERCOOKED_H_
#define VSARENA_GAMES_OVERCOOKED_H_

#include <array>
#include <string>
#include <vector>

#include "vsarena/core/game.h"
#include "vsarena/games/grid_common.h"

namespace vsarena::overcooked {

using grid::Dir;
using grid::Pos;

// ASCII kitchen: X counter, O onion source, D dish source, P pot,
// S serving window, . floor, digits 1/2 chef spawns (on floor).
inline constexpr char kCrampedRoom[] =
    "XXPXX\n"
    "O..2O\n"
    "X1..X\n"
    "XDXSX\n";

struct Layout {
  int width = 0;
  int height = 0;
  std::vector<std::string> rows;  // spawn digits replaced by '.'
  std::array<Pos, 2> spawns{};

  static Layout Parse(const std::string& ascii);
  char At(Pos p) const;
  bool Walkable(Pos p) const { return At(p) == '.'; }
  std::vector<Pos> Find(char tile) const;
};

enum class Item { kNone, kOnion, kDish, kSoup };
const char* ItemName(Item item);

struct Chef {
  Pos pos;
  Dir facing = Dir::kUp;
  Item held = Item::kNone;
  // Onions in the held soup.
  int soup_onions = 0;
  bool operator==(const Chef&) const = default;
};

struct Pot {
  Pos pos;
  int onions = 0;
  bool cooking = false;
  int timer = 0;
  bool cooked = false;
  bool operator==(const Pot&) const = default;
  bool Active() const { return onions > 0 || cooking || cooked; }
};

struct OvercookedConfig {
  std::string layout = kCrampedRoom;
  int horizon = 50;
  int cook_time = 5;
  int recipe_onions = 3;
  int max_pot_onions = 3;
  double onion_reward = 2.0;
  double dish_reward = 2.0;
  double plate_reward = 2.0;
  double delivery_reward = 10.0;
};

const std::vector<std::string>& ActionTokens();

class OvercookedState : public State {
 public:
  explicit OvercookedState(const OvercookedConfig& config);

  std::unique_ptr<State> Clone() const override;
  bool IsTerminal() const override { return step_index_ >= config_.horizon; }
  int CurrentAgent() const override {
    return IsTerminal() ? kTerminalAgent : kSimultaneousAgents;
  }
  std::vector<std::string> LegalActions(int agent) const override;
  Transition Apply(const std::vector<std::string>& joint) override;
  std::string Serialize() const override;

  const OvercookedConfig& config() const { return config_; }
  const Layout& layout() const { return layout_; }
  const Chef& chef(int agent) const { return chefs_[agent]; }
  const std::vector<Pot>& pots() const { return pots_; }
  int deliveries() const { return deliveries_; }

  // Test hooks.
  Chef& mutable_chef(int agent) { return chefs_[agent]; }
  Pot& mutable_pot(int index) { return pots_[index]; }

 private:
  void Interact(int agent, Transition& t, std::vector<bool>& started);
  void Reward(Transition& t, double amount, GameEvent event);

  OvercookedConfig config_;
  Layout layout_;
  std::array<Chef, 2> chefs_;
  std::vector<Pot> pots_;
  int deliveries_ = 0;
};

class OvercookedGame : public Game {
 public:
  explicit OvercookedGame(OvercookedConfig config = {});
  const GameSpec& spec() const override { return spec_; }
  std::unique_ptr<State> NewInitialState(uint64_t seed) const override;
  nlohmann::json params() const override;
  const OvercookedConfig& config() const { return config_; }

 private:
  OvercookedConfig config_;
  GameSpec spec_;
};

}  // namespace vsarena::overcooked

#endif  // VSARENA_GAMES_OVERCOOKED_H_
