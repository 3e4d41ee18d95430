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

#include "vsarena/games/registry.h"

#include <map>
#include <set>

#include "vsarena/core/error.h"
#include "vsarena/games/breakthrough.h"
#include "vsarena/games/dilemmas.h"
#include "vsarena/games/hanabi.h"
#include "vsarena/games/kuhn_poker.h"
#include "vsarena/games/overcooked.h"
#include "vsarena/games/pong.h"
#include "vsarena/games/tic_tac_toe.h"

namespace vsarena {
namespace {

void CheckKeys(const std::string& game, const nlohmann::json& params,
               const std::set<std::string>& allowed) {
  if (!params.is_object()) {
    throw Error(ErrorCode::kConfig, game + ": parameters must be an object");
  }
  for (const auto& [key, value] : params.items()) {
    if (!allowed.count(key)) {
      throw Error(ErrorCode::kConfig, game + ": unknown parameter '" + key + "'");
    }
  }
}

template <typename T>
void Read(const nlohmann::json& params, const char* key, T& out) {
  if (params.contains(key)) out = params.at(key).get<T>();
}

std::shared_ptr<const Game> MakeDilemma(grid::DilemmaKind kind,
                                        const nlohmann::json& params) {
  grid::DilemmaConfig config;
  config.kind = kind;
  CheckKeys(grid::DilemmaName(kind), params, {"horizon", "width", "height", "rewards"});
  Read(params, "horizon", config.horizon);
  Read(params, "width", config.width);
  Read(params, "height", config.height);
  config.rewards = grid::DefaultRewardTable(kind);
  if (params.contains("rewards")) {
    for (const auto& [key, row] : params.at("rewards").items()) {
      if (!config.rewards.count(key)) {
        throw Error(ErrorCode::kConfig, std::string(grid::DilemmaName(kind)) +
                                            ": unknown reward row '" + key + "'");
      }
      config.rewards[key] = {row.at(0).get<double>(), row.at(1).get<double>()};
    }
  }
  if (config.width < 2 || config.height < 2 || config.horizon < 1) {
    throw Error(ErrorCode::kConfig, "grid dimensions and horizon must be positive");
  }
  config.center = {config.width / 2, config.height / 2};
  return std::make_shared<grid::DilemmaGame>(config);
}

}  // namespace

const std::vector<std::string>& RegisteredGames() {
  static const std::vector<std::string> kNames = {
      "hanabi",       "overcooked",     "breakthrough",     "kuhn_poker",
      "pong",         "coin_dilemma",   "monster_hunt",     "battle_of_colors",
      "tiny_hanabi",  "tic_tac_toe"};
  return kNames;
}

const std::vector<std::string>& BenchmarkGames() {
  static const std::vector<std::string> kNames(RegisteredGames().begin(),
                                               RegisteredGames().begin() + 8);
  return kNames;
}

std::string CanonicalGameName(const std::string& name) {
  static const std::map<std::string, std::string> kAliases = {
      {"kuhn", "kuhn_poker"},        {"poker", "kuhn_poker"},
      {"coin", "coin_dilemma"},      {"dilemma", "coin_dilemma"},
      {"hunt", "monster_hunt"},      {"battle", "battle_of_colors"},
      {"board", "breakthrough"},     {"tictactoe", "tic_tac_toe"},
      {"tiny", "tiny_hanabi"}};
  for (const auto& n : RegisteredGames()) {
    if (n == name) return n;
  }
  auto it = kAliases.find(name);
  if (it != kAliases.end()) return it->second;
  std::string list;
  for (const auto& n : RegisteredGames()) list += (list.empty() ? "" : ", ") + n;
  throw Error(ErrorCode::kUnknownEnvironment,
              "unknown environment '" + name + "'; registered: " + list);
}

std::shared_ptr<const Game> MakeGame(const std::string& raw_name,
                                     const nlohmann::json& raw_params) {
  const std::string name = CanonicalGameName(raw_name);
  const nlohmann::json params = raw_params.is_null() ? nlohmann::json::object() : raw_params;
  try {
    if (name == "hanabi" || name == "tiny_hanabi") {
      CheckKeys(name, params, {});
      return std::make_shared<hanabi::HanabiGame>(
          name == "hanabi" ? hanabi::HanabiConfig::Full() : hanabi::HanabiConfig::Tiny(),
          name);
    }
    if (name == "overcooked") {
      CheckKeys(name, params, {"layout", "horizon", "cook_time"});
      overcooked::OvercookedConfig config;
      Read(params, "layout", config.layout);
      Read(params, "horizon", config.horizon);
      Read(params, "cook_time", config.cook_time);
      return std::make_shared<overcooked::OvercookedGame>(config);
    }
    if (name == "breakthrough") {
      CheckKeys(name, params, {});
      return std::make_shared<breakthrough::BreakthroughGame>();
    }
    if (name == "kuhn_poker") {
      CheckKeys(name, params, {});
      return std::make_shared<kuhn::KuhnPokerGame>();
    }
    if (name == "tic_tac_toe") {
      CheckKeys(name, params, {});
      return std::make_shared<tictactoe::TicTacToeGame>();
    }
    if (name == "pong") {
      CheckKeys(name, params,
                {"sticky_prob", "frame_stack", "max_steps", "min_noops", "max_noops"});
      pong::PongConfig config;
      Read(params, "sticky_prob", config.sticky_prob);
      Read(params, "frame_stack", config.frame_stack);
      Read(params, "max_steps", config.max_steps);
      Read(params, "min_noops", config.min_noops);
      Read(params, "max_noops", config.max_noops);
      if (config.min_noops < 0 || config.max_noops < config.min_noops) {
        throw Error(ErrorCode::kConfig, "pong: bad no-op range");
      }
      return std::make_shared<pong::PongGame>(config);
    }
    if (name == "coin_dilemma") return MakeDilemma(grid::DilemmaKind::kCoinDilemma, params);
    if (name == "monster_hunt") return MakeDilemma(grid::DilemmaKind::kMonsterHunt, params);
    if (name == "battle_of_colors") {
      return MakeDilemma(grid::DilemmaKind::kBattleOfColors, params);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kConfig, name + ": bad parameter value: " + e.what());
  }
  throw Error(ErrorCode::kUnknownEnvironment, "unknown environment '" + name + "'");
}

}  // namespace vsarena
