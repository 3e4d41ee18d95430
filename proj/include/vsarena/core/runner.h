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

#ifndef VSARENA_CORE_RUNNER_H_
#define VSARENA_CORE_RUNNER_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "vsarena/core/environment.h"
#include "vsarena/core/game.h"
#include "vsarena/core/policy.h"

namespace vsarena {

struct TrajectoryStep {
  int step = 0;
  std::vector<std::string> actions;
  std::vector<double> rewards;
  std::vector<GameEvent> events;
  // Per-agent text observation before the action, when recorded.
  std::vector<std::string> observations;
};

struct Trajectory {
  uint64_t seed = 0;
  GameSpec spec;
  nlohmann::json params = nlohmann::json::object();
  std::vector<std::string> participants;
  std::vector<TrajectoryStep> steps;
  std::vector<double> returns;
  bool terminal = false;
  // Hidden-information serialization of the final state.
  std::string final_state;

  std::vector<std::vector<std::string>> ActionList() const;
  int CountEvents(const std::string& kind, int actor = -1) const;
};

struct RunOptions {
  bool record_observations = false;
  // Extra cap on top of the game's own termination; 0 disables it.
  int max_steps = 0;
  // Invoked before each joint action is chosen.
  std::function<void(const Environment&)> on_state;
};

// Plays one episode. Agents that are not to move in a turn-based game
// submit the no-op token without consulting their policy. Policy failures
// are rethrown as Error(kPolicy) naming the step.
Trajectory RunEpisode(std::shared_ptr<const Game> game, uint64_t seed,
                      const std::vector<Policy*>& policies,
                      const RunOptions& options = {});

// Re-executes a recorded action list.
Trajectory Replay(std::shared_ptr<const Game> game, uint64_t seed,
                  const std::vector<std::vector<std::string>>& actions,
                  std::vector<std::string> participants = {},
                  bool record_observations = false);

// Header record plus one record per step. `timestamp` is written verbatim
// into every record; an empty string stamps the current UTC time.
std::string ToJsonl(const Trajectory& trajectory, const std::string& timestamp = "");
Trajectory FromJsonl(const std::string& text);

std::string IsoTimestampNow();

}  // namespace vsarena

#endif  // VSARENA_CORE_RUNNER_H_
