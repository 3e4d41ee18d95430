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

#include "vsarena/games/overcooked.h"

#include <sstream>

#include "vsarena/core/error.h"

namespace vsarena::overcooked {

Layout Layout::Parse(const std::string& ascii) {
  Layout layout;
  std::istringstream in(ascii);
  std::string line;
  bool seen[2] = {false, false};
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (layout.width == 0) layout.width = static_cast<int>(line.size());
    if (static_cast<int>(line.size()) != layout.width) {
      throw Error(ErrorCode::kConfig, "overcooked layout: ragged rows");
    }
    for (int x = 0; x < layout.width; ++x) {
      const char c = line[x];
      if (c == '1' || c == '2') {
        const int agent = c - '1';
        layout.spawns[agent] = {x, static_cast<int>(layout.rows.size())};
        seen[agent] = true;
        line[x] = '.';
      } else if (std::string("XODPS.").find(c) == std::string::npos) {
        throw Error(ErrorCode::kConfig,
                    std::string("overcooked layout: unknown tile '") + c + "'");
      }
    }
    layout.rows.push_back(line);
  }
  layout.height = static_cast<int>(layout.rows.size());
  if (!seen[0] || !seen[1]) {
    throw Error(ErrorCode::kConfig, "overcooked layout: needs spawns 1 and 2");
  }
  return layout;
}

char Layout::At(Pos p) const {
  if (p.x < 0 || p.y < 0 || p.x >= width || p.y >= height) return 'X';
  return rows[p.y][p.x];
}

std::vector<Pos> Layout::Find(char tile) const {
  std::vector<Pos> found;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      if (rows[y][x] == tile) found.push_back({x, y});
    }
  }
  return found;
}

const char* ItemName(Item item) {
  switch (item) {
    case Item::kNone: return "nothing";
    case Item::kOnion: return "onion";
    case Item::kDish: return "dish";
    case Item::kSoup: return "soup";
  }
  return "nothing";
}

const std::vector<std::string>& ActionTokens() {
  static const std::vector<std::string> kTokens = {
      grid::kUp, grid::kDown, grid::kLeft, grid::kRight, grid::kStay, grid::kInteract};
  return kTokens;
}

OvercookedState::OvercookedState(const OvercookedConfig& config)
    : config_(config), layout_(Layout::Parse(config.layout)) {
  for (int a = 0; a < 2; ++a) chefs_[a].pos = layout_.spawns[a];
  for (Pos p : layout_.Find('P')) pots_.push_back(Pot{p});
}

std::unique_ptr<State> OvercookedState::Clone() const {
  return std::make_unique<OvercookedState>(*this);
}

std::vector<std::string> OvercookedState::LegalActions(int) const {
  if (IsTerminal()) return {};
  return ActionTokens();
}

void OvercookedState::Reward(Transition& t, double amount, GameEvent event) {
  t.rewards[0] += amount;
  t.rewards[1] += amount;
  t.events.push_back(std::move(event));
}

void OvercookedState::Interact(int agent, Transition& t, std::vector<bool>& started) {
  Chef& chef = chefs_[agent];
  const Pos target = grid::Offset(chef.pos, chef.facing);
  const char tile = layout_.At(target);
  switch (tile) {
    case 'O':
      if (chef.held == Item::kNone) {
        chef.held = Item::kOnion;
        t.events.push_back({"onion-pickup", {agent}});
      }
      break;
    case 'D':
      if (chef.held == Item::kNone) {
        chef.held = Item::kDish;
        bool pot_active = false;
        for (const Pot& pot : pots_) pot_active |= pot.Active();
        const bool other_has_dish = chefs_[1 - agent].held == Item::kDish;
        if (pot_active && !other_has_dish) {
          Reward(t, config_.dish_reward, {"dish-pickup", {agent}});
        } else {
          t.events.push_back({"dish-pickup-idle", {agent}});
        }
      }
      break;
    case 'P': {
      for (size_t i = 0; i < pots_.size(); ++i) {
        Pot& pot = pots_[i];
        if (pot.pos != target) continue;
        if (chef.held == Item::kOnion && !pot.cooking && !pot.cooked &&
            pot.onions < config_.max_pot_onions) {
          ++pot.onions;
          chef.held = Item::kNone;
          Reward(t, config_.onion_reward, {"onion-added", {agent}});
        } else if (chef.held == Item::kNone && pot.onions > 0 && !pot.cooking &&
                   !pot.cooked) {
          pot.cooking = true;
          pot.timer = 0;
          started[i] = true;
          t.events.push_back({"cook-start", {agent}});
        } else if (chef.held == Item::kDish && pot.cooked) {
          chef.held = Item::kSoup;
          chef.soup_onions = pot.onions;
          pot = Pot{pot.pos};
          Reward(t, config_.plate_reward, {"soup-plated", {agent}});
        }
      }
      break;
    }
    case 'S':
      if (chef.held == Item::kSoup) {
        const bool valid = chef.soup_onions == config_.recipe_onions;
        chef.held = Item::kNone;
        chef.soup_onions = 0;
        if (valid) {
          ++deliveries_;
          Reward(t, config_.delivery_reward, {"soup-delivered", {agent}});
        } else {
          t.events.push_back({"soup-rejected", {agent}});
        }
      }
      break;
    default:
      break;
  }
}

Transition OvercookedState::Apply(const std::vector<std::string>& joint) {
  Transition t;
  t.rewards = {0.0, 0.0};
  std::array<Pos, 2> proposed;
  std::array<bool, 2> interact{false, false};
  for (int a = 0; a < 2; ++a) {
    Chef& chef = chefs_[a];
    proposed[a] = chef.pos;
    const std::string& token = joint.at(a);
    if (token == grid::kInteract) {
      interact[a] = true;
      continue;
    }
    const Dir dir = grid::ParseDir(token);
    if (dir == Dir::kStay) continue;
    chef.facing = dir;
    const Pos next = grid::Offset(chef.pos, dir);
    if (layout_.Walkable(next)) proposed[a] = next;
  }
  // Chefs block each other: no shared destination and no swapping.
  const bool same = proposed[0] == proposed[1];
  const bool swap = proposed[0] == chefs_[1].pos && proposed[1] == chefs_[0].pos;
  if (!same && !swap) {
    chefs_[0].pos = proposed[0];
    chefs_[1].pos = proposed[1];
  }
  std::vector<bool> started(pots_.size(), false);
  for (int a = 0; a < 2; ++a) {
    if (interact[a]) Interact(a, t, started);
  }
  for (size_t i = 0; i < pots_.size(); ++i) {
    Pot& pot = pots_[i];
    if (!pot.cooking || started[i]) continue;
    if (++pot.timer >= config_.cook_time) {
      pot.cooking = false;
      pot.cooked = true;
      t.events.push_back({"soup-ready", {}});
    }
  }
  ++step_index_;
  return t;
}

std::string OvercookedState::Serialize() const {
  std::string s = "overcooked t=" + std::to_string(step_index_);
  for (int a = 0; a < 2; ++a) {
    const Chef& c = chefs_[a];
    s += " chef" + std::to_string(a) + "=" + grid::PosString(c.pos) +
         grid::DirToken(c.facing) + ItemName(c.held) + std::to_string(c.soup_onions);
  }
  for (const Pot& p : pots_) {
    s += " pot" + grid::PosString(p.pos) + "=" + std::to_string(p.onions) + "/" +
         std::to_string(p.cooking) + "/" + std::to_string(p.timer) + "/" +
         std::to_string(p.cooked);
  }
  s += " deliveries=" + std::to_string(deliveries_);
  return s;
}

OvercookedGame::OvercookedGame(OvercookedConfig config) : config_(std::move(config)) {
  Layout::Parse(config_.layout);  // validate early
  spec_.name = "overcooked";
  spec_.interaction = InteractionClass::kCooperative;
  spec_.max_steps = config_.horizon;
  // Online play shows the current frame; offline samples carry four.
  spec_.history_depth = 1;
  spec_.action_vocabulary = {ActionTokens(), ActionTokens()};
}

std::unique_ptr<State> OvercookedGame::NewInitialState(uint64_t) const {
  return std::make_unique<OvercookedState>(config_);
}

nlohmann::json OvercookedGame::params() const {
  return {{"layout", config_.layout},
          {"horizon", config_.horizon},
          {"cook_time", config_.cook_time}};
}

}  // namespace vsarena::overcooked
