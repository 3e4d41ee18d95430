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

#ifndef VSARENA_CORE_ENVIRONMENT_H_
#define VSARENA_CORE_ENVIRONMENT_H_

#include <cstdint>
#include <deque>
#include <memory>
#include <string>
#include <vector>

#include "vsarena/core/game.h"

namespace vsarena {

// What one agent perceives: rendered frames (PNG bytes, most recent last)
// and an information-equivalent text description of the latest state.
struct Observation {
  std::vector<std::string> frames;
  std::string text;
};

struct StepResult {
  std::vector<double> rewards;
  bool terminal = false;
  std::vector<GameEvent> events;
};

// Stateful wrapper that validates joint actions and keeps the short state
// history needed for frame stacking.
class Environment {
 public:
  explicit Environment(std::shared_ptr<const Game> game);

  Environment(const Environment&) = delete;
  Environment& operator=(const Environment&) = delete;

  void Reset(uint64_t seed);

  // Every token must be in that agent's legal set; throws
  // IllegalActionError otherwise and Error(kTerminalState) after the end.
  StepResult Step(const std::vector<std::string>& joint);

  std::vector<std::string> LegalActions(int agent) const;

  // `depth` frames ending at the current state; 0 uses the spec's history
  // depth. Missing early frames repeat the initial one.
  Observation Observe(int agent, int depth = 0) const;
  std::string ObserveText(int agent) const;
  std::vector<std::string> ObserveFrames(int agent, int depth = 0) const;

  const Game& game() const { return *game_; }
  std::shared_ptr<const Game> shared_game() const { return game_; }
  const GameSpec& spec() const { return game_->spec(); }
  const State& state() const;
  // History states, oldest first, ending with the current state.
  std::vector<const State*> History(int depth) const;
  bool IsTerminal() const { return state().IsTerminal(); }
  int CurrentAgent() const { return state().CurrentAgent(); }
  uint64_t seed() const { return seed_; }
  int step_index() const { return state().step_index(); }

 private:
  std::shared_ptr<const Game> game_;
  // Oldest first; back() is the live state.
  std::deque<std::unique_ptr<State>> states_;
  size_t keep_ = 1;
  uint64_t seed_ = 0;
};

}  // namespace vsarena

#endif  // VSARENA_CORE_ENVIRONMENT_H_
