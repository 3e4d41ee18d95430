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

#include "vsarena/core/environment.h"

#include <algorithm>

#include "vsarena/core/error.h"
#include "vsarena/render/render.h"

namespace vsarena {
namespace {

// Offline samples stack up to four frames even where online play shows one.
constexpr int kMinKeptStates = 4;

}  // namespace

Environment::Environment(std::shared_ptr<const Game> game) : game_(std::move(game)) {
  if (!game_) throw Error(ErrorCode::kInvalidArgument, "environment needs a game");
  keep_ = static_cast<size_t>(std::max(spec().history_depth, kMinKeptStates));
  Reset(0);
}

void Environment::Reset(uint64_t seed) {
  seed_ = seed;
  states_.clear();
  states_.push_back(game_->NewInitialState(seed));
}

const State& Environment::state() const { return *states_.back(); }

std::vector<std::string> Environment::LegalActions(int agent) const {
  if (agent < 0 || agent >= spec().num_agents) {
    throw Error(ErrorCode::kInvalidArgument, "agent index out of range");
  }
  return state().LegalActions(agent);
}

StepResult Environment::Step(const std::vector<std::string>& joint) {
  const State& current = state();
  if (current.IsTerminal()) {
    throw Error(ErrorCode::kTerminalState,
                spec().name + ": step after the episode has ended");
  }
  if (static_cast<int>(joint.size()) != spec().num_agents) {
    throw Error(ErrorCode::kInvalidArgument,
                spec().name + ": joint action needs one token per agent");
  }
  for (int a = 0; a < spec().num_agents; ++a) {
    std::vector<std::string> legal = current.LegalActions(a);
    if (std::find(legal.begin(), legal.end(), joint[a]) == legal.end()) {
      throw IllegalActionError(a, joint[a], std::move(legal));
    }
  }
  std::unique_ptr<State> next = current.Clone();
  Transition t = next->Apply(joint);
  StepResult result;
  result.rewards = std::move(t.rewards);
  result.events = std::move(t.events);
  result.terminal = next->IsTerminal();
  states_.push_back(std::move(next));
  while (states_.size() > keep_) states_.pop_front();
  return result;
}

std::vector<const State*> Environment::History(int depth) const {
  if (depth <= 0) depth = spec().history_depth;
  if (depth > static_cast<int>(keep_)) {
    throw Error(ErrorCode::kInvalidArgument, "requested more frames than are kept");
  }
  std::vector<const State*> out;
  const int available = static_cast<int>(states_.size());
  for (int i = depth - 1; i >= 0; --i) {
    const int index = std::max(0, available - 1 - i);
    out.push_back(states_[index].get());
  }
  return out;
}

std::string Environment::ObserveText(int agent) const {
  return render::RenderText(state(), agent);
}

std::vector<std::string> Environment::ObserveFrames(int agent, int depth) const {
  std::vector<std::string> frames;
  const State* last = nullptr;
  for (const State* s : History(depth)) {
    // Padding repeats the same state; encode it once.
    if (s == last) {
      frames.push_back(frames.back());
    } else {
      frames.push_back(render::RenderPng(*s, agent));
    }
    last = s;
  }
  return frames;
}

Observation Environment::Observe(int agent, int depth) const {
  return {ObserveFrames(agent, depth), ObserveText(agent)};
}

}  // namespace vsarena
