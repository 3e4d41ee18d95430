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

#include <algorithm>

#include "vsarena/agents/baselines.h"
#include "vsarena/core/error.h"

namespace vsarena::agents {

using grid::Manhattan;
using grid::Pos;

namespace {

struct ScriptInfo {
  GridScript script;
  const char* name;
};

constexpr ScriptInfo kScripts[] = {
    {GridScript::kOwnColorCoin, "own-color-coin"},
    {GridScript::kClosestCoin, "closest-coin"},
    {GridScript::kTowardMonster, "toward-monster"},
    {GridScript::kCampCenter, "camp-center"},
    {GridScript::kCampCorner, "camp-corner"},
    {GridScript::kClosestApple, "closest-apple"},
    {GridScript::kClosestCommonBlock, "closest-common-block"},
    {GridScript::kOwnColorBlock, "own-color-block"},
    {GridScript::kBiasedRed, "biased-red"},
    {GridScript::kBiasedBlue, "biased-blue"},
};

grid::DilemmaKind KindFor(GridScript script) {
  switch (script) {
    case GridScript::kOwnColorCoin:
    case GridScript::kClosestCoin:
      return grid::DilemmaKind::kCoinDilemma;
    case GridScript::kTowardMonster:
    case GridScript::kCampCenter:
    case GridScript::kCampCorner:
    case GridScript::kClosestApple:
      return grid::DilemmaKind::kMonsterHunt;
    default:
      return grid::DilemmaKind::kBattleOfColors;
  }
}

}  // namespace

const std::vector<std::string>& GridScriptNames() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> names;
    for (const auto& s : kScripts) names.push_back(s.name);
    return names;
  }();
  return kNames;
}

GridScript ParseGridScript(const std::string& name) {
  for (const auto& s : kScripts) {
    if (name == s.name) return s.script;
  }
  throw Error(ErrorCode::kConfig, "unknown grid script '" + name + "'");
}

const char* GridScriptName(GridScript script) {
  for (const auto& s : kScripts) {
    if (s.script == script) return s.name;
  }
  return "unknown";
}

Pos GridScriptTarget(GridScript script, const grid::DilemmaState& state, int agent) {
  if (state.kind() != KindFor(script)) {
    throw Error(ErrorCode::kPolicy, std::string(GridScriptName(script)) +
                                        " does not apply to " + grid::DilemmaName(state.kind()));
  }
  const Pos me = state.player(agent);
  const auto& items = state.items();
  switch (script) {
    case GridScript::kOwnColorCoin:
    case GridScript::kOwnColorBlock:
      return items[agent];
    case GridScript::kClosestCoin:
      // Ties go to the agent's own coin.
      return Manhattan(me, items[1 - agent]) < Manhattan(me, items[agent]) ? items[1 - agent]
                                                                            : items[agent];
    case GridScript::kClosestApple:
      return Manhattan(me, items[1]) < Manhattan(me, items[0]) ? items[1] : items[0];
    case GridScript::kTowardMonster:
      return state.monster();
    case GridScript::kCampCenter:
      return state.config().center;
    case GridScript::kCampCorner:
      return {0, 0};
    case GridScript::kClosestCommonBlock: {
      // Both players compute the same block: smallest summed distance,
      // red on ties.
      const Pos red = state.player(grid::kRed), blue = state.player(grid::kBlue);
      const int d_red = Manhattan(red, items[grid::kRed]) + Manhattan(blue, items[grid::kRed]);
      const int d_blue = Manhattan(red, items[grid::kBlue]) + Manhattan(blue, items[grid::kBlue]);
      return d_blue < d_red ? items[grid::kBlue] : items[grid::kRed];
    }
    case GridScript::kBiasedRed:
      return items[grid::kRed];
    case GridScript::kBiasedBlue:
      return items[grid::kBlue];
  }
  return me;
}

std::string GridScriptAction(GridScript script, const grid::DilemmaState& state, int agent) {
  const Pos target = GridScriptTarget(script, state, agent);
  return grid::DirToken(grid::StepToward(state.player(agent), target));
}

GridScriptPolicy::GridScriptPolicy(GridScript script) : script_(script) {}

std::string GridScriptPolicy::Act(const Environment& env, int agent, Rng&) {
  const auto* s = dynamic_cast<const grid::DilemmaState*>(&env.state());
  if (s == nullptr) throw Error(ErrorCode::kPolicy, "grid script used outside a grid game");
  return GridScriptAction(script_, *s, agent);
}

}  // namespace vsarena::agents
