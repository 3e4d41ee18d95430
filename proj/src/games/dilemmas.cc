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

#include "vsarena/games/dilemmas.h"

#include <algorithm>

#include "vsarena/core/error.h"

namespace vsarena::grid {

const char* AgentColorName(int agent) { return agent == kRed ? "red" : "blue"; }

const char* DilemmaName(DilemmaKind kind) {
  switch (kind) {
    case DilemmaKind::kCoinDilemma: return "coin_dilemma";
    case DilemmaKind::kMonsterHunt: return "monster_hunt";
    case DilemmaKind::kBattleOfColors: return "battle_of_colors";
  }
  return "unknown";
}

RewardTable DefaultRewardTable(DilemmaKind kind) {
  switch (kind) {
    case DilemmaKind::kCoinDilemma:
      return {{"own-coin/red", {1, 0}},
              {"cross-coin/red", {1, -2}},
              {"own-coin/blue", {0, 1}},
              {"cross-coin/blue", {-2, 1}}};
    case DilemmaKind::kMonsterHunt:
      return {{"apple/red", {2, 0}},
              {"apple/blue", {0, 2}},
              {"monster-alone/red", {-2, 0}},
              {"monster-alone/blue", {0, -2}},
              {"monster-joint", {5, 5}}};
    case DilemmaKind::kBattleOfColors:
      return {{"red-block-meet", {2, 1}},
              {"blue-block-meet", {1, 2}},
              {"block-mismatch", {0, 0}}};
  }
  return {};
}

std::string TableKey(const GameEvent& event) {
  if (event.actors.size() == 1) {
    return event.kind + "/" + AgentColorName(event.actors[0]);
  }
  return event.kind;
}

std::string RowDescription(const std::string& key) {
  static const std::map<std::string, std::string> kDescriptions = {
      {"own-coin/red", "Red collects red coin"},
      {"cross-coin/red", "Red collects blue coin"},
      {"own-coin/blue", "Blue collects blue coin"},
      {"cross-coin/blue", "Blue collects red coin"},
      {"apple/red", "Red eats an apple"},
      {"apple/blue", "Blue eats an apple"},
      {"monster-alone/red", "Red meets monster alone"},
      {"monster-alone/blue", "Blue meets monster alone"},
      {"monster-joint", "Both defeat the monster"},
      {"red-block-meet", "Both on red block"},
      {"blue-block-meet", "Both on blue block"},
      {"block-mismatch", "Players on different blocks"},
  };
  auto it = kDescriptions.find(key);
  return it == kDescriptions.end() ? key : it->second;
}

DilemmaState::DilemmaState(const DilemmaConfig& config, uint64_t seed)
    : config_(config), respawn_(seed, rng_stream::kRespawn) {
  if (config_.rewards.empty()) config_.rewards = DefaultRewardTable(config_.kind);
  for (const auto& [key, row] : config_.rewards) counters_[key] = 0;
  std::vector<Pos> taken;
  for (auto& p : players_) {
    p = RandomFreeCell(taken);
    taken.push_back(p);
  }
  for (auto& item : items_) {
    item = RandomFreeCell(taken);
    taken.push_back(item);
  }
  if (config_.kind == DilemmaKind::kMonsterHunt) {
    monster_ = RandomFreeCell(taken);
  } else {
    monster_ = {-1, -1};
  }
}

std::unique_ptr<State> DilemmaState::Clone() const {
  return std::make_unique<DilemmaState>(*this);
}

bool DilemmaState::IsTerminal() const { return step_index_ >= config_.horizon; }

std::vector<std::string> DilemmaState::LegalActions(int) const {
  if (IsTerminal()) return {};
  return MoveTokens();
}

bool DilemmaState::InBounds(Pos p) const {
  return p.x >= 0 && p.y >= 0 && p.x < config_.width && p.y < config_.height;
}

Pos DilemmaState::Resolve(int agent, Dir dir) const {
  Pos next = Offset(players_[agent], dir);
  return InBounds(next) ? next : players_[agent];
}

Pos DilemmaState::MonsterStep(Pos monster, Pos red, Pos blue) const {
  const Pos target = Manhattan(monster, blue) < Manhattan(monster, red) ? blue : red;
  return Offset(monster, StepToward(monster, target));
}

std::vector<Pos> DilemmaState::Occupied() const {
  std::vector<Pos> occ(players_.begin(), players_.end());
  occ.insert(occ.end(), items_.begin(), items_.end());
  if (config_.kind == DilemmaKind::kMonsterHunt) occ.push_back(monster_);
  return occ;
}

Pos DilemmaState::RandomFreeCell(const std::vector<Pos>& occupied) {
  std::vector<Pos> free;
  for (int y = 0; y < config_.height; ++y) {
    for (int x = 0; x < config_.width; ++x) {
      Pos p{x, y};
      if (std::find(occupied.begin(), occupied.end(), p) == occupied.end()) {
        free.push_back(p);
      }
    }
  }
  if (free.empty()) throw Error(ErrorCode::kInternal, "grid: board is full");
  return free[respawn_.Uniform(free.size())];
}

void DilemmaState::Emit(Transition& t, GameEvent event) {
  const std::string key = TableKey(event);
  auto it = config_.rewards.find(key);
  if (it == config_.rewards.end()) {
    throw Error(ErrorCode::kInternal, "grid: no reward row for " + key);
  }
  t.rewards[0] += it->second[0];
  t.rewards[1] += it->second[1];
  ++counters_[key];
  t.events.push_back(std::move(event));
}

Transition DilemmaState::Apply(const std::vector<std::string>& joint) {
  Transition t;
  t.rewards = {0.0, 0.0};
  const std::array<Pos, 2> before = players_;
  const std::array<Pos, 2> after = {Resolve(0, ParseDir(joint.at(0))),
                                    Resolve(1, ParseDir(joint.at(1)))};
  players_ = after;

  switch (config_.kind) {
    case DilemmaKind::kCoinDilemma: {
      std::array<bool, 2> collected{false, false};
      for (int coin = 0; coin < 2; ++coin) {
        for (int agent = 0; agent < 2; ++agent) {
          if (players_[agent] != items_[coin]) continue;
          collected[coin] = true;
          Emit(t, {coin == agent ? "own-coin" : "cross-coin", {agent}});
        }
      }
      for (int coin = 0; coin < 2; ++coin) {
        if (!collected[coin]) continue;
        items_[coin] = {-1, -1};
        items_[coin] = RandomFreeCell(Occupied());
      }
      break;
    }
    case DilemmaKind::kMonsterHunt: {
      std::array<bool, 2> eaten{false, false};
      for (int apple = 0; apple < 2; ++apple) {
        for (int agent = 0; agent < 2; ++agent) {
          if (players_[agent] != items_[apple]) continue;
          eaten[apple] = true;
          Emit(t, {"apple", {agent}});
        }
      }
      const Pos monster_before = monster_;
      monster_ = MonsterStep(monster_, players_[kRed], players_[kBlue]);
      std::array<bool, 2> met{};
      for (int agent = 0; agent < 2; ++agent) {
        // Swapping cells with the monster counts as meeting it.
        met[agent] = players_[agent] == monster_ ||
                     (players_[agent] == monster_before && monster_ == before[agent]);
      }
      if (met[kRed] && met[kBlue] && players_[kRed] == players_[kBlue]) {
        Emit(t, {"monster-joint", {kRed, kBlue}});
        monster_ = {-1, -1};
        monster_ = RandomFreeCell(Occupied());
      } else {
        for (int agent = 0; agent < 2; ++agent) {
          if (!met[agent]) continue;
          Emit(t, {"monster-alone", {agent}});
          players_[agent] = {-1, -1};
          players_[agent] = RandomFreeCell(Occupied());
        }
      }
      for (int apple = 0; apple < 2; ++apple) {
        if (!eaten[apple]) continue;
        items_[apple] = {-1, -1};
        items_[apple] = RandomFreeCell(Occupied());
      }
      break;
    }
    case DilemmaKind::kBattleOfColors: {
      auto on = [&](int agent, int block) { return players_[agent] == items_[block]; };
      std::vector<int> refresh;
      if (on(kRed, kRed) && on(kBlue, kRed)) {
        Emit(t, {"red-block-meet", {kRed, kBlue}});
        refresh = {kRed};
      } else if (on(kRed, kBlue) && on(kBlue, kBlue)) {
        Emit(t, {"blue-block-meet", {kRed, kBlue}});
        refresh = {kBlue};
      } else if ((on(kRed, kRed) && on(kBlue, kBlue)) ||
                 (on(kRed, kBlue) && on(kBlue, kRed))) {
        Emit(t, {"block-mismatch", {kRed, kBlue}});
        refresh = {kRed, kBlue};
      }
      for (int block : refresh) items_[block] = {-1, -1};
      for (int block : refresh) items_[block] = RandomFreeCell(Occupied());
      break;
    }
  }
  ++step_index_;
  return t;
}

std::string DilemmaState::Serialize() const {
  std::string s = DilemmaName(config_.kind);
  s += " t=" + std::to_string(step_index_);
  s += " red=" + PosString(players_[0]) + " blue=" + PosString(players_[1]);
  s += " items=" + PosString(items_[0]) + PosString(items_[1]);
  if (config_.kind == DilemmaKind::kMonsterHunt) s += " monster=" + PosString(monster_);
  for (const auto& [k, v] : counters_) s += " " + k + "=" + std::to_string(v);
  return s;
}

DilemmaGame::DilemmaGame(DilemmaConfig config) : config_(std::move(config)) {
  if (config_.rewards.empty()) config_.rewards = DefaultRewardTable(config_.kind);
  spec_.name = DilemmaName(config_.kind);
  spec_.interaction = InteractionClass::kMixed;
  spec_.max_steps = config_.horizon;
  spec_.history_depth = 1;
  spec_.action_vocabulary = {MoveTokens(), MoveTokens()};
}

std::unique_ptr<State> DilemmaGame::NewInitialState(uint64_t seed) const {
  return std::make_unique<DilemmaState>(config_, seed);
}

nlohmann::json DilemmaGame::params() const {
  nlohmann::json j;
  j["horizon"] = config_.horizon;
  j["width"] = config_.width;
  j["height"] = config_.height;
  nlohmann::json table = nlohmann::json::object();
  for (const auto& [k, row] : config_.rewards) table[k] = {row[0], row[1]};
  j["rewards"] = table;
  return j;
}

}  // namespace vsarena::grid
