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

#include "vsarena/agents/baselines.h"

#include <algorithm>

#include "vsarena/agents/positions.h"
#include "vsarena/core/error.h"
#include "vsarena/games/breakthrough.h"
#include "vsarena/games/tic_tac_toe.h"

namespace vsarena::agents {

std::string RandomPolicy::Act(const Environment& env, int agent, Rng& rng) {
  const auto legal = env.LegalActions(agent);
  if (legal.empty()) throw Error(ErrorCode::kPolicy, "random policy: empty legal set");
  return legal[rng.Uniform(legal.size())];
}

MinimaxPolicy::MinimaxPolicy(int depth) : depth_(depth) {
  if (depth < 1) throw Error(ErrorCode::kInvalidArgument, "minimax depth must be >= 1");
}

std::string MinimaxPolicy::name() const { return "minimax(depth=" + std::to_string(depth_) + ")"; }

std::string MinimaxPolicy::Act(const Environment& env, int, Rng&) {
  if (auto* s = dynamic_cast<const breakthrough::BreakthroughState*>(&env.state())) {
    BreakthroughPosition pos(s->board());
    return BreakthroughPosition::MoveToken(AlphaBetaSearch(pos, depth_).move);
  }
  if (auto* s = dynamic_cast<const tictactoe::TicTacToeState*>(&env.state())) {
    TicTacToePosition pos(*s);
    return TicTacToePosition::MoveToken(AlphaBetaSearch(pos, depth_).move);
  }
  throw Error(ErrorCode::kPolicy, "minimax supports breakthrough and tic_tac_toe only");
}

MctsPolicy::MctsPolicy(MctsConfig config) : config_(config) {}

std::string MctsPolicy::name() const {
  return "mcts(c=" + std::to_string(config_.uct_c).substr(0, 4) +
         ",sims=" + std::to_string(config_.simulations) +
         ",rollouts=" + std::to_string(config_.rollouts) + ")";
}

std::string MctsPolicy::Act(const Environment& env, int, Rng& rng) {
  if (auto* s = dynamic_cast<const breakthrough::BreakthroughState*>(&env.state())) {
    Mcts<BreakthroughPosition> mcts(config_);
    return BreakthroughPosition::MoveToken(mcts.Search(BreakthroughPosition(s->board()), rng));
  }
  if (auto* s = dynamic_cast<const tictactoe::TicTacToeState*>(&env.state())) {
    Mcts<TicTacToePosition> mcts(config_);
    return TicTacToePosition::MoveToken(mcts.Search(TicTacToePosition(*s), rng));
  }
  throw Error(ErrorCode::kPolicy, "mcts supports breakthrough and tic_tac_toe only");
}

NoisyPolicy::NoisyPolicy(std::unique_ptr<Policy> inner, double epsilon)
    : inner_(std::move(inner)), epsilon_(epsilon) {
  if (epsilon < 0.0 || epsilon > 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must lie in [0, 1]");
  }
}

std::string NoisyPolicy::Act(const Environment& env, int agent, Rng& rng) {
  // The inner policy always runs so its internal state stays in step.
  std::string choice = inner_->Act(env, agent, rng);
  if (rng.Bernoulli(epsilon_)) {
    const auto legal = env.LegalActions(agent);
    choice = legal[rng.Uniform(legal.size())];
  }
  return choice;
}

std::string NoisyPolicy::name() const {
  return inner_->name() + "+eps" + std::to_string(epsilon_).substr(0, 4);
}

}  // namespace vsarena::agents
