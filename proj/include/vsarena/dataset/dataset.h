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

#ifndef VSARENA_DATASET_DATASET_H_
#define VSARENA_DATASET_DATASET_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "vsarena/core/game.h"
#include "vsarena/core/rng.h"

namespace vsarena::dataset {

inline constexpr int kDatasetSize = 400;

// One next-action prediction question. The predictor observes the state at
// `step` and guesses the subject's action at that step.
struct ReasoningSample {
  int id = 0;
  std::string env;
  std::string group;
  uint64_t episode_seed = 0;
  int step = 0;
  int episode_length = 0;
  int predictor = 0;
  int subject = 1;
  std::vector<std::string> frames;  // PNG bytes, oldest first.
  std::string text;
  std::vector<std::string> legal;   // Subject's legal tokens.
  std::string ground_truth;
  std::vector<std::string> equivalence_set;
  // Hanabi move class ("play", "discard", "reveal"); empty elsewhere.
  std::string action_type;
};

// A block of samples drawn from games between two fixed agents.
struct RecipeGroup {
  std::string label;
  std::vector<std::string> agents;  // Agent spec per seat.
  int count = 0;
  // Games simulated for the candidate pool.
  int episodes = 0;
  // Uniformly random moves played at the start of each game (both seats);
  // diversifies otherwise deterministic search agents.
  int opening_random_plies = 0;
};

struct DatasetRecipe {
  std::string env;
  nlohmann::json game_params = nlohmann::json::object();
  std::vector<RecipeGroup> groups;
  // Frames per sample.
  int frames = 1;
  // Seat whose actions are predicted; -1 uses both seats.
  int subject = -1;
  // Split each group evenly between the two predicting seats.
  bool balance_predictor = true;
  // Spread samples evenly over tenths of the episode.
  bool stratify_steps = true;
  // Hanabi Play:Discard:Reveal weights; empty disables the balance.
  std::vector<double> action_ratio;
  // Largest allowed share of STAY ground truths; negative disables.
  double stay_cap = -1.0;
  // Drop subject moves that change nothing (Overcooked only).
  bool filter_ineffective = false;
  // Drop Hanabi reveals as unpredictable from the predictor's view.
  bool exclude_reveals = false;
  // Known departures from the original data sources.
  std::vector<std::string> deviations;

  int TotalCount() const;
};

nlohmann::json ToJson(const DatasetRecipe& recipe);
DatasetRecipe RecipeFromJson(const nlohmann::json& j);

// The default recipe per benchmark environment.
DatasetRecipe DefaultRecipe(const std::string& env);

struct Dataset {
  DatasetRecipe recipe;
  uint64_t seed = 0;
  std::vector<ReasoningSample> samples;

  // Samples per group label.
  std::map<std::string, int> GroupCounts() const;
};

// Throws Error(kInvalidArgument) when the candidate pool cannot satisfy
// the recipe's counts and balance constraints.
Dataset GenerateDataset(const DatasetRecipe& recipe, uint64_t seed);

// Outcome-equivalent tokens for the grid dilemmas: every movement token
// that resolves to the same cell as `ground_truth`. Other games return the
// singleton.
std::vector<std::string> EquivalenceSet(const State& state, int subject,
                                        const std::string& ground_truth);

// The same set found by simulating every legal token against the other
// agent's recorded action and comparing the resulting state and events.
std::vector<std::string> BruteForceEquivalenceSet(const State& state, int subject,
                                                  const std::vector<std::string>& joint);

// <dir>/manifest.json, <dir>/samples.jsonl, <dir>/frames/*.png.
void WriteDataset(const Dataset& dataset, const std::string& dir);
Dataset ReadDataset(const std::string& dir);

nlohmann::json SampleToJson(const ReasoningSample& sample,
                            const std::vector<std::string>& frame_paths);

struct ScoreReport {
  int total = 0;
  int correct = 0;
  int missing = 0;
  double accuracy = 0.0;  // Percent of all samples.
};

// Missing predictions count as wrong.
ScoreReport ScorePredictions(const std::vector<ReasoningSample>& samples,
                             const std::map<int, std::string>& predictions);

// Mean accuracy of a predictor drawing uniformly from each sample's legal
// set, over `repetitions` independent passes.
double RandomPredictorAccuracy(const std::vector<ReasoningSample>& samples, Rng& rng,
                               int repetitions);

}  // namespace vsarena::dataset

#endif  // VSARENA_DATASET_DATASET_H_
