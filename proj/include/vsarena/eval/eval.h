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

#ifndef VSARENA_EVAL_EVAL_H_
#define VSARENA_EVAL_EVAL_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "vsarena/agents/remote.h"
#include "vsarena/core/runner.h"

namespace vsarena::eval {

// 100 * (raw - random) / (optimal - random). Throws Error(kInvalidArgument)
// when the references coincide.
double Normalize(double raw, double random_ref, double optimal_ref);

// Raw returns of the random and the optimal agent for one metric.
struct Reference {
  double random = 0.0;
  double optimal = 0.0;
  // "published" for published constants, "measured" for in-repo Monte-Carlo
  // estimates.
  std::string source = "published";
};

// Per-env metric references. Metrics: "return" everywhere, plus
// "firework" (Hanabi) and "score"/"step" (Pong, where "return" is unused).
struct ReferenceSet {
  std::map<std::string, Reference> metrics;
  // The published Table values, kept for side-by-side reporting.
  std::map<std::string, Reference> published;
};

ReferenceSet DefaultReferences(const std::string& env);

enum class OpponentKind { kSelfPlay, kFixed };

struct EvalProtocol {
  std::string env;
  OpponentKind opponent_kind = OpponentKind::kSelfPlay;
  std::string opponent;  // Agent spec when kFixed.
  // Seats the evaluated agent takes, one entry per game block.
  std::vector<int> seats;
  int games_per_seat = 10;
  // Kuhn groups games into runs; each run's mean is one sample.
  int runs = 0;
  int games_per_run = 0;
  nlohmann::json game_params = nlohmann::json::object();
};

EvalProtocol DefaultProtocol(const std::string& env);

struct Stat {
  double mean = 0.0;
  double std = 0.0;  // Population standard deviation.
  int n = 0;
};

Stat Summarize(const std::vector<double>& values);

struct EvalReport {
  std::string env;
  std::string agent;
  int planned = 0;
  int completed = 0;
  int aborted = 0;
  // Headline metric (normalized) and its raw counterpart.
  Stat raw;
  Stat normalized;
  // Every metric: raw and normalized.
  std::map<std::string, Stat> raw_metrics;
  std::map<std::string, Stat> normalized_metrics;
  // Mean event counts per episode (mixed-motive games).
  std::map<std::string, double> counters;
  ReferenceSet references;
  std::vector<uint64_t> seeds;

  nlohmann::json ToJson() const;
  std::string ToTable() const;
};

struct EvalOptions {
  uint64_t seed = 0;
  // Parallel episodes; each worker builds its own policies.
  int workers = 1;
  agents::RemoteConfig remote;
  // Overrides the protocol's counts when positive.
  int episodes = 0;
  // Optional callback per finished trajectory (writing JSONL, etc.).
  std::function<void(const Trajectory&, int index)> on_trajectory;
};

// Runs the protocol for the agent described by `agent_spec`.
EvalReport RunProtocol(const EvalProtocol& protocol, const std::string& agent_spec,
                       const ReferenceSet& references, const EvalOptions& options = {});

// Monte-Carlo estimate of the random or oracle agent's raw metrics under
// the env's protocol.
std::map<std::string, double> ComputeReference(const std::string& env, const std::string& kind,
                                               int episodes, uint64_t seed);

// Event tallies per episode, keyed "<event>" and "<event>/<agent>".
std::map<std::string, double> BehaviorCounters(const Trajectory& trajectory);

// Returns the reward each agent would get from the env's event table
// applied to the trajectory's counters (mixed-motive games).
std::vector<double> ReturnsFromCounters(const Trajectory& trajectory);

// Unweighted mean of the normalized headline metric.
double OverallScore(const std::vector<EvalReport>& reports);

}  // namespace vsarena::eval

#endif  // VSARENA_EVAL_EVAL_H_
