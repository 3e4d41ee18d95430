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

#include "vsarena/core/error.h"
#include "vsarena/dataset/dataset.h"
#include "vsarena/games/registry.h"

namespace vsarena::dataset {
namespace {

RecipeGroup Group(std::string label, std::string a, std::string b, int count, int episodes,
                  int opening = 0) {
  return RecipeGroup{std::move(label), {std::move(a), std::move(b)}, count, episodes, opening};
}

}  // namespace

int DatasetRecipe::TotalCount() const {
  int total = 0;
  for (const auto& g : groups) total += g.count;
  return total;
}

DatasetRecipe DefaultRecipe(const std::string& env) {
  DatasetRecipe r;
  r.env = CanonicalGameName(env);
  const std::string& e = r.env;
  if (e == "coin_dilemma") {
    const std::string cw = "own-color-coin", si = "closest-coin";
    r.groups = {Group("common-welfare+common-welfare", cw, cw, 100, 12),
                Group("self-interest+self-interest", si, si, 100, 12),
                Group("common-welfare+self-interest", cw, si, 50, 8),
                Group("self-interest+common-welfare", si, cw, 50, 8),
                Group("random+self-interest", "random", si, 50, 8),
                Group("self-interest+random", si, "random", 50, 8)};
  } else if (e == "monster_hunt") {
    const std::string m = "toward-monster", c = "camp-center", k = "camp-corner",
                      a = "closest-apple";
    r.groups = {Group("common-welfare-1+common-welfare-1", m, m, 80, 10),
                Group("common-welfare-2+common-welfare-2", c, c, 80, 10),
                Group("common-welfare-3+common-welfare-3", k, k, 80, 10),
                Group("self-interest+self-interest", a, a, 80, 10),
                Group("random+self-interest", "random", a, 40, 8),
                Group("self-interest+random", a, "random", 40, 8)};
  } else if (e == "battle_of_colors") {
    const std::string cw = "closest-common-block", si = "own-color-block";
    r.groups = {Group("common-welfare+common-welfare", cw, cw, 100, 12),
                Group("self-interest+self-interest", si, si, 100, 12),
                Group("common-welfare+self-interest", cw, si, 50, 8),
                Group("self-interest+common-welfare", si, cw, 50, 8),
                Group("biased-red+biased-red", "biased-red", "biased-red", 50, 8),
                Group("biased-blue+biased-blue", "biased-blue", "biased-blue", 50, 8)};
  } else if (e == "kuhn_poker") {
    const char* alphas[] = {"0", "1/6", "1/3"};
    int index = 0;
    for (const char* a : alphas) {
      for (const char* b : alphas) {
        // 400 = 4 * 45 + 5 * 44.
        const int count = index < 4 ? 45 : 44;
        r.groups.push_back(Group(std::string("alpha=") + a + "+alpha=" + b,
                                 std::string("kuhn-ne:alpha=") + a,
                                 std::string("kuhn-ne:alpha=") + b, count, 600));
        ++index;
      }
    }
    r.balance_predictor = false;
    r.stratify_steps = false;
  } else if (e == "breakthrough") {
    const int pairs[6][2] = {{3, 4}, {3, 5}, {4, 5}, {4, 6}, {4, 4}, {5, 5}};
    for (int i = 0; i < 6; ++i) {
      const std::string a = "minimax:depth=" + std::to_string(pairs[i][0]);
      const std::string b = "minimax:depth=" + std::to_string(pairs[i][1]);
      r.groups.push_back(Group("depth-" + std::to_string(pairs[i][0]) + "+depth-" +
                                   std::to_string(pairs[i][1]),
                               a, b, i < 4 ? 67 : 66, 6, 4));
    }
    r.deviations.push_back(
        "each game opens with four uniformly random plies so that deterministic minimax "
        "pairs produce distinct games");
  } else if (e == "hanabi") {
    r.groups = {Group("strong+strong", "hanabi-heuristic", "hanabi-heuristic", 360, 60),
                Group("weak+strong", "hanabi-heuristic:eps=0.3", "hanabi-heuristic", 40, 20)};
    r.action_ratio = {2.0, 3.0, 4.0};
    r.deviations.push_back(
        "trajectories come from a rule-based heuristic (strong) and the same heuristic with "
        "30% random moves (weak) instead of reasoning and chat model play");
  } else if (e == "overcooked") {
    const std::string s = "overcooked-script";
    r.groups = {Group("script-eps0.1+script-eps0.1", s + ":eps=0.1", s + ":eps=0.1", 200, 30),
                Group("script-eps0.3+script-eps0.3", s + ":eps=0.3", s + ":eps=0.3", 100, 20),
                Group("script-eps0.5+script-eps0.1", s + ":eps=0.5", s + ":eps=0.1", 50, 10),
                Group("script-eps0.1+script-eps0.5", s + ":eps=0.1", s + ":eps=0.5", 50, 10)};
    r.frames = 4;
    r.stay_cap = 0.1;
    r.filter_ineffective = true;
    r.stratify_steps = false;
    r.deviations.push_back(
        "trajectories come from scripted chefs with random action noise instead of "
        "recorded human play");
  } else if (e == "pong") {
    const std::string bot = "pong-bot";
    r.groups = {Group("bot+tracker", bot, "pong-tracker", 100, 3),
                Group("bot+tracker-aim4", bot, "pong-tracker:aim=4", 100, 3),
                Group("bot+noisy-tracker", bot, "pong-tracker:aim=2,eps=0.3", 100, 3),
                Group("bot+random", bot, "random", 100, 6)};
    r.frames = 4;
    r.subject = 1;
    r.balance_predictor = false;
    r.deviations.push_back(
        "the right paddle is played by scripted trackers and a random agent instead of "
        "logged model play; the predictor controls the left paddle");
  } else {
    throw Error(ErrorCode::kConfig, "no dataset recipe for " + e);
  }
  return r;
}

nlohmann::json ToJson(const DatasetRecipe& r) {
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& g : r.groups) {
    groups.push_back({{"label", g.label},
                      {"agents", g.agents},
                      {"count", g.count},
                      {"episodes", g.episodes},
                      {"opening_random_plies", g.opening_random_plies}});
  }
  return {{"env", r.env},
          {"game_params", r.game_params},
          {"groups", groups},
          {"frames", r.frames},
          {"subject", r.subject},
          {"balance_predictor", r.balance_predictor},
          {"stratify_steps", r.stratify_steps},
          {"action_ratio", r.action_ratio},
          {"stay_cap", r.stay_cap},
          {"filter_ineffective", r.filter_ineffective},
          {"exclude_reveals", r.exclude_reveals},
          {"deviations", r.deviations}};
}

DatasetRecipe RecipeFromJson(const nlohmann::json& j) {
  try {
    DatasetRecipe r;
    r.env = j.at("env").get<std::string>();
    r.game_params = j.value("game_params", nlohmann::json::object());
    for (const auto& g : j.at("groups")) {
      r.groups.push_back(RecipeGroup{g.at("label").get<std::string>(),
                                     g.at("agents").get<std::vector<std::string>>(),
                                     g.at("count").get<int>(), g.at("episodes").get<int>(),
                                     g.value("opening_random_plies", 0)});
    }
    r.frames = j.value("frames", 1);
    r.subject = j.value("subject", -1);
    r.balance_predictor = j.value("balance_predictor", true);
    r.stratify_steps = j.value("stratify_steps", true);
    r.action_ratio = j.value("action_ratio", std::vector<double>{});
    r.stay_cap = j.value("stay_cap", -1.0);
    r.filter_ineffective = j.value("filter_ineffective", false);
    r.exclude_reveals = j.value("exclude_reveals", false);
    r.deviations = j.value("deviations", std::vector<std::string>{});
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kConfig, std::string("malformed recipe: ") + e.what());
  }
}

}  // namespace vsarena::dataset
