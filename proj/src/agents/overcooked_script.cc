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

#include <array>
#include <optional>
#include <queue>

#include "vsarena/agents/baselines.h"
#include "vsarena/core/error.h"
#include "vsarena/games/overcooked.h"

namespace vsarena::agents {
namespace {

using grid::Dir;
using grid::Pos;
using overcooked::Item;
using overcooked::OvercookedState;

constexpr int kServer = 0;
constexpr int kRunner = 1;
constexpr Dir kDirs[] = {Dir::kUp, Dir::kDown, Dir::kLeft, Dir::kRight};
// Fewest steps from an empty pot to a delivered soup in the default kitchen.
// A soup that cannot be finished before the horizon is not started.
constexpr int kSoupCycle = 20;

// One planned move: the action and the cell the chef intends to enter.
struct Plan {
  std::string action;
  Pos destination;
};

Plan Stay(const OvercookedState& s, int agent) { return {grid::kStay, s.chef(agent).pos}; }

// Walk to a floor cell next to `tile`, face it and interact.
Plan Interact(const OvercookedState& s, int agent, char tile) {
  const auto& layout = s.layout();
  const Pos start = s.chef(agent).pos;
  const Pos blocked = s.chef(1 - agent).pos;
  // Breadth-first distances over floor cells, the other chef as a wall.
  std::vector<int> dist(layout.width * layout.height, -1);
  std::vector<Pos> parent(layout.width * layout.height);
  auto index = [&](Pos p) { return p.y * layout.width + p.x; };
  std::queue<Pos> frontier;
  dist[index(start)] = 0;
  frontier.push(start);
  while (!frontier.empty()) {
    const Pos p = frontier.front();
    frontier.pop();
    for (Dir d : kDirs) {
      const Pos n = grid::Offset(p, d);
      if (!layout.Walkable(n) || n == blocked || dist[index(n)] >= 0) continue;
      dist[index(n)] = dist[index(p)] + 1;
      parent[index(n)] = p;
      frontier.push(n);
    }
  }
  std::optional<Pos> best_spot;
  Dir best_face = Dir::kStay;
  for (const Pos target : layout.Find(tile)) {
    for (Dir d : kDirs) {
      // Spot is the floor cell from which facing `d` looks at the target.
      const Pos spot = grid::Offset(target, d);
      if (!layout.Walkable(spot) || dist[index(spot)] < 0) continue;
      if (!best_spot || dist[index(spot)] < dist[index(*best_spot)]) {
        best_spot = spot;
        best_face = d == Dir::kUp ? Dir::kDown
                    : d == Dir::kDown ? Dir::kUp
                    : d == Dir::kLeft ? Dir::kRight
                                      : Dir::kLeft;
      }
    }
  }
  if (!best_spot) return Stay(s, agent);
  if (*best_spot == start) {
    if (s.chef(agent).facing == best_face) return {grid::kInteract, start};
    // Turning towards a counter does not move the chef.
    return {grid::DirToken(best_face), start};
  }
  Pos step = *best_spot;
  while (parent[index(step)] != start) step = parent[index(step)];
  return {grid::DirToken(grid::StepToward(start, step)), step};
}

Plan Intended(const OvercookedState& s, int agent) {
  const auto& pot = s.pots().at(0);
  const bool pot_accepts = !pot.cooking && !pot.cooked && pot.onions < s.config().max_pot_onions;
  const Item held = s.chef(agent).held;
  const bool runner = agent == kRunner;
  if (held == Item::kSoup) return Interact(s, agent, 'S');
  if (held == Item::kDish) {
    if (pot.cooked || pot.cooking) return Interact(s, agent, 'P');
    return Stay(s, agent);
  }
  const int remaining = s.config().horizon - s.step_index();
  const bool fresh_pot = pot.onions == 0 && !pot.cooking && !pot.cooked;
  if (fresh_pot && remaining < kSoupCycle) return Stay(s, agent);
  if (held == Item::kOnion) {
    if (pot_accepts) return Interact(s, agent, 'P');
    return Stay(s, agent);
  }
  // Empty-handed.
  if (runner) {
    if (!pot.cooking && !pot.cooked && pot.onions == s.config().recipe_onions) {
      return Interact(s, agent, 'P');
    }
    return Interact(s, agent, 'O');
  }
  const bool other_has_dish = s.chef(1 - agent).held == Item::kDish;
  if (pot.Active() && !other_has_dish) return Interact(s, agent, 'D');
  return Stay(s, agent);
}

}  // namespace

std::string OvercookedScriptPolicy::Act(const Environment& env, int agent, Rng&) {
  const auto* s = dynamic_cast<const OvercookedState*>(&env.state());
  if (s == nullptr) throw Error(ErrorCode::kPolicy, "overcooked script used outside Overcooked");
  const Plan mine = Intended(*s, agent);
  const Plan theirs = Intended(*s, 1 - agent);
  const Pos here = s->chef(agent).pos;
  const Pos there = s->chef(1 - agent).pos;
  const bool clash = mine.destination == theirs.destination && mine.destination != here;
  const bool swap = mine.destination == there && theirs.destination == here && here != there;
  // The runner yields; the server keeps the right of way.
  if ((clash || swap) && agent == kRunner) return grid::kStay;
  return mine.action;
}

}  // namespace vsarena::agents
