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

#ifndef VSARENA_AGENTS_BASELINES_H_
#define VSARENA_AGENTS_BASELINES_H_

#include <memory>
#include <string>
#include <vector>

#include "vsarena/agents/search.h"
#include "vsarena/core/policy.h"
#include "vsarena/games/dilemmas.h"

namespace vsarena::agents {

// Uniform over the legal set.
class RandomPolicy : public Policy {
 public:
  std::string Act(const Environment& env, int agent, Rng& rng) override;
  std::string name() const override { return "random"; }
};

// Depth-limited alpha-beta for Breakthrough and Tic-Tac-Toe.
class MinimaxPolicy : public Policy {
 public:
  explicit MinimaxPolicy(int depth);
  std::string Act(const Environment& env, int agent, Rng& rng) override;
  std::string name() const override;
  int depth() const { return depth_; }

 private:
  int depth_;
};

class MctsPolicy : public Policy {
 public:
  explicit MctsPolicy(MctsConfig config = {});
  std::string Act(const Environment& env, int agent, Rng& rng) override;
  std::string name() const override;

 private:
  MctsConfig config_;
};

// The scripted heuristics for the three social dilemmas.
enum class GridScript {
  kOwnColorCoin,
  kClosestCoin,
  kTowardMonster,
  kCampCenter,
  kCampCorner,
  kClosestApple,
  kClosestCommonBlock,
  kOwnColorBlock,
  kBiasedRed,
  kBiasedBlue,
};

const std::vector<std::string>& GridScriptNames();
GridScript ParseGridScript(const std::string& name);
const char* GridScriptName(GridScript script);

// Cell the script walks towards for `agent`.
grid::Pos GridScriptTarget(GridScript script, const grid::DilemmaState& state, int agent);
// Greedy step towards the target (horizontal axis first; STAY on arrival).
std::string GridScriptAction(GridScript script, const grid::DilemmaState& state, int agent);

class GridScriptPolicy : public Policy {
 public:
  explicit GridScriptPolicy(GridScript script);
  std::string Act(const Environment& env, int agent, Rng& rng) override;
  std::string name() const override { return GridScriptName(script_); }

 private:
  GridScript script_;
};

// Wraps a policy and replaces its choice by a uniform legal action with
// probability epsilon. Used to diversify dataset trajectories.
class NoisyPolicy : public Policy {
 public:
  NoisyPolicy(std::unique_ptr<Policy> inner, double epsilon);
  std::string Act(const Environment& env, int agent, Rng& rng) override;
  void Reset(uint64_t seed) override { inner_->Reset(seed); }
  std::string name() const override;

 private:
  std::unique_ptr<Policy> inner_;
  double epsilon_;
};

// Role-based Overcooked chefs: one carries onions and starts the cook, the
// other fetches dishes, plates and serves. Paired with itself it completes
// two deliveries in the default 50-step kitchen.
class OvercookedScriptPolicy : public Policy {
 public:
  OvercookedScriptPolicy() = default;
  std::string Act(const Environment& env, int agent, Rng& rng) override;
  std::string name() const override { return "overcooked-script"; }
};

// Rule-based Hanabi player: plays cards known to be playable, hints
// partner cards that are playable, otherwise discards the oldest card.
class HanabiHeuristicPolicy : public Policy {
 public:
  std::string Act(const Environment& env, int agent, Rng& rng) override;
  std::string name() const override { return "hanabi-heuristic"; }
};

// The left-paddle opponent: follows the ball only while it approaches,
// moving on every other tick, and drifts back to the middle otherwise.
class PongBotPolicy : public Policy {
 public:
  std::string Act(const Environment& env, int agent, Rng& rng) override;
  std::string name() const override { return "pong-bot"; }
};

// Moves towards the point where the ball will cross its paddle line.
// `aim` shifts the contact point away from the paddle centre (0 is the
// safest; larger values produce steeper returns).
class PongTrackerPolicy : public Policy {
 public:
  explicit PongTrackerPolicy(int aim = 0) : aim_(aim) {}
  std::string Act(const Environment& env, int agent, Rng& rng) override;
  std::string name() const override;

 private:
  int aim_;
};

}  // namespace vsarena::agents

#endif  // VSARENA_AGENTS_BASELINES_H_
