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

#ifndef VSARENA_CORE_GAME_H_
#define VSARENA_CORE_GAME_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

namespace vsarena {

enum class InteractionClass { kCooperative, kCompetitive, kMixed };

const char* InteractionClassName(InteractionClass c);

// Static description of one environment.
struct GameSpec {
  std::string name;
  int num_agents = 2;
  InteractionClass interaction = InteractionClass::kCompetitive;
  // 0 means no horizon beyond the game's own termination rule.
  int max_steps = 0;
  // Housed for completeness; every evaluation uses undiscounted sums.
  double discount = 1.0;
  // Number of frames carried by an observation.
  int history_depth = 1;
  // Every text token an agent may ever submit (legal sets are subsets).
  std::vector<std::vector<std::string>> action_vocabulary;
};

nlohmann::json ToJson(const GameSpec& spec);

struct GameEvent {
  std::string kind;
  std::vector<int> actors;

  bool operator==(const GameEvent&) const = default;
};

std::string EventTag(const GameEvent& event);

// What a single joint action did to the state.
struct Transition {
  std::vector<double> rewards;
  std::vector<GameEvent> events;
};

// Submitted by agents that are not to move in turn-based games.
inline constexpr char kNoopToken[] = "<NOOP>";

inline constexpr int kSimultaneousAgents = -1;
inline constexpr int kTerminalAgent = -2;

class State {
 public:
  virtual ~State() = default;

  virtual std::unique_ptr<State> Clone() const = 0;
  virtual bool IsTerminal() const = 0;

  // Index of the agent to move, kSimultaneousAgents, or kTerminalAgent.
  virtual int CurrentAgent() const = 0;

  // Text tokens the agent may submit now. Turn-based games return
  // {kNoopToken} for the waiting agent; terminal states return {}.
  virtual std::vector<std::string> LegalActions(int agent) const = 0;

  // Applies a joint action whose tokens are already known to be legal.
  virtual Transition Apply(const std::vector<std::string>& joint) = 0;

  // Full serialization including hidden information. Used for replay and
  // determinism checks, never shown to agents.
  virtual std::string Serialize() const = 0;

  int step_index() const { return step_index_; }

 protected:
  int step_index_ = 0;
};

class Game {
 public:
  virtual ~Game() = default;
  virtual const GameSpec& spec() const = 0;
  virtual std::unique_ptr<State> NewInitialState(uint64_t seed) const = 0;
  // Parameters the instance was built with (after defaults are applied).
  virtual nlohmann::json params() const { return nlohmann::json::object(); }
};

}  // namespace vsarena

#endif  // VSARENA_CORE_GAME_H_
