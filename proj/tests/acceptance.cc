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

// Acceptance suite: one pass/fail line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "vsarena/agents/factory.h"
#include "vsarena/agents/kuhn_ne.h"
#include "vsarena/core/rng.h"
#include "vsarena/dataset/dataset.h"
#include "vsarena/eval/eval.h"
#include "vsarena/games/grid_common.h"
#include "vsarena/games/registry.h"
#include "vsarena/verify/verify.h"

namespace vsarena {
namespace {

// Tolerances and budgets.
constexpr double kKuhnTolerance = 1e-12;
constexpr double kKuhnSeconds = 1.0;
constexpr int kBreakthroughMinWins = 19;
constexpr double kBreakthroughSeconds = 15 * 60;
constexpr double kHanabiNormTolerance = 0.05;
constexpr double kOvercookedNormTolerance = 0.1;
constexpr double kOvercookedSeconds = 1.0;
constexpr int kStructureEpisodes = 1000;
constexpr double kStructureSeconds = 5 * 60;
constexpr int kHanabiEpisodes = 1000;
constexpr int kEquivalenceStates = 1000;
constexpr double kRandomAccuracyTolerance = 3.0;
constexpr int kRandomAccuracyDraws = 200;
constexpr double kVerifySeconds = 20 * 60;
constexpr uint64_t kSeed = 2026;

struct Outcome {
  bool passed = true;
  std::string detail;

  void Require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void Note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

std::string Fmt(const char* format, double v) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. Kuhn equilibrium oracle.
Outcome KuhnCriterion() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto check = verify::CheckKuhnEquilibrium({0.0, 1.0 / 6, 1.0 / 3}, kKuhnTolerance);
  o.Require(check.passed, check.detail);
  // Seat-balanced 60/60 split of NE self-play: the published optimum 0.0.
  for (double alpha : {0.0, 1.0 / 6, 1.0 / 3}) {
    const auto ne = agents::KuhnEquilibrium(alpha);
    const double seat0 = agents::KuhnExpectedValue(ne, ne);
    const double balanced = (60 * seat0 + 60 * -seat0) / 120.0;
    o.Require(std::abs(balanced - 0.0) < kKuhnTolerance, "60/60 split is not 0");
  }
  const double secs = Seconds(start);
  o.Require(secs < kKuhnSeconds, "took " + Fmt("%.2f s", secs));
  if (o.passed) o.Note(check.detail + ", 60/60 split value 0");
  return o;
}

// 2. Breakthrough search hierarchy under the evaluation protocol.
Outcome BreakthroughCriterion() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto protocol = eval::DefaultProtocol("breakthrough");
  const auto refs = eval::DefaultReferences("breakthrough");
  eval::EvalOptions options;
  options.seed = kSeed;
  auto wins = [](const eval::EvalReport& r) {
    // Every game ends with +1 or -1.
    return static_cast<int>(std::lround((r.raw.mean + 1.0) / 2.0 * r.completed));
  };
  const auto strong = eval::RunProtocol(protocol, "minimax:depth=5", refs, options);
  const auto weak = eval::RunProtocol(protocol, "random", refs, options);
  o.Require(strong.completed == 20 && weak.completed == 20, "incomplete protocol");
  o.Require(wins(strong) >= kBreakthroughMinWins,
            "minimax-5 won " + std::to_string(wins(strong)) + "/20");
  o.Require(wins(weak) == 0, "random won " + std::to_string(wins(weak)) + "/20");
  const double secs = Seconds(start);
  o.Require(secs <= kBreakthroughSeconds, "took " + Fmt("%.0f s", secs));
  o.Note("minimax-5 " + std::to_string(wins(strong)) + "/20 vs MCTS, random " +
         std::to_string(wins(weak)) + "/20, " + Fmt("%.0f s", secs));
  return o;
}

// 3. Normalization against two published table cells.
Outcome NormalizationCriterion() {
  Outcome o;
  const double hanabi = eval::Normalize(13.6, 0.0, 24.0);
  const double overcooked = eval::Normalize(7.0, 0.2, 40.0);
  o.Require(std::abs(hanabi - 56.7) <= kHanabiNormTolerance, "hanabi " + Fmt("%.4f", hanabi));
  o.Require(std::abs(overcooked - 17.0) <= kOvercookedNormTolerance,
            "overcooked " + Fmt("%.4f", overcooked));
  o.Note("56.7 -> " + Fmt("%.3f", hanabi) + ", 17.0 -> " + Fmt("%.3f", overcooked));
  return o;
}

// 4. Overcooked oracle and premature cook.
Outcome OvercookedCriterion() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto check = verify::CheckOvercookedOracle();
  o.Require(check.passed, check.detail);
  const double secs = Seconds(start);
  o.Require(secs < kOvercookedSeconds, "took " + Fmt("%.2f s", secs));
  if (o.passed) o.Note(check.detail);
  return o;
}

// 5. Reward-structure law over every benchmark environment.
Outcome StructureCriterion() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& env : BenchmarkGames()) {
    const auto r = verify::CheckRewardStructure(env, kStructureEpisodes, kSeed);
    o.Require(r.passed, env + ": " + r.detail);
  }
  const double secs = Seconds(start);
  o.Require(secs <= kStructureSeconds, "took " + Fmt("%.0f s", secs));
  o.Note(std::to_string(kStructureEpisodes) + " episodes x 8 envs, " + Fmt("%.1f s", secs));
  return o;
}

// 6. Hanabi conservation and scoring.
Outcome HanabiCriterion() {
  Outcome o;
  const auto conservation = verify::CheckHanabiConservation(kHanabiEpisodes, kSeed);
  const auto scoring = verify::CheckHanabiScoring();
  o.Require(conservation.passed, conservation.detail);
  o.Require(scoring.passed, scoring.detail);
  if (o.passed) o.Note(conservation.detail + "; " + scoring.detail);
  return o;
}

std::vector<int> SortedCounts(const dataset::Dataset& d) {
  std::vector<int> counts;
  for (const auto& [label, n] : d.GroupCounts()) counts.push_back(n);
  std::sort(counts.rbegin(), counts.rend());
  return counts;
}

// 7. Dataset recipes, equivalence sets and random-predictor accuracy.
Outcome DatasetCriterion() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::map<std::string, dataset::Dataset> built;
  for (const auto& env : BenchmarkGames()) {
    built[env] = dataset::GenerateDataset(dataset::DefaultRecipe(env), kSeed);
    o.Require(built[env].samples.size() == 400, env + " has " +
                                                    std::to_string(built[env].samples.size()));
  }
  const std::vector<int> six = {100, 100, 50, 50, 50, 50};
  o.Require(SortedCounts(built["coin_dilemma"]) == six, "coin composition");
  o.Require(SortedCounts(built["battle_of_colors"]) == six, "battle composition");
  o.Require(SortedCounts(built["monster_hunt"]) == std::vector<int>{80, 80, 80, 80, 40, 40},
            "hunt composition");

  // Kuhn: every pair from {0, 1/6, 1/3} for the two seats.
  std::set<std::pair<std::string, std::string>> kuhn_pairs;
  for (const auto& g : built["kuhn_poker"].recipe.groups) {
    kuhn_pairs.insert({agents::ParseAgentSpec(g.agents[0]).params.at("alpha"),
                       agents::ParseAgentSpec(g.agents[1]).params.at("alpha")});
  }
  o.Require(kuhn_pairs.size() == 9 && built["kuhn_poker"].GroupCounts().size() == 9,
            "kuhn combos");

  std::set<std::pair<int, int>> depth_pairs;
  for (const auto& g : built["breakthrough"].recipe.groups) {
    depth_pairs.insert({std::stoi(agents::ParseAgentSpec(g.agents[0]).params.at("depth")),
                        std::stoi(agents::ParseAgentSpec(g.agents[1]).params.at("depth"))});
  }
  const std::set<std::pair<int, int>> expected_pairs = {{3, 4}, {3, 5}, {4, 5},
                                                        {4, 6}, {4, 4}, {5, 5}};
  o.Require(depth_pairs == expected_pairs && built["breakthrough"].GroupCounts().size() == 6,
            "breakthrough depth pairs");

  std::map<std::string, int> types;
  for (const auto& s : built["hanabi"].samples) ++types[s.action_type];
  const double ideal[3] = {400 * 2 / 9.0, 400 * 3 / 9.0, 400 * 4 / 9.0};
  const char* names[3] = {"play", "discard", "reveal"};
  std::string ratio;
  for (int i = 0; i < 3; ++i) {
    o.Require(std::abs(types[names[i]] - ideal[i]) <= 1.0, std::string("hanabi ") + names[i]);
    ratio += (i ? ":" : "") + std::to_string(types[names[i]]);
  }

  int stays = 0;
  for (const auto& s : built["overcooked"].samples) stays += s.ground_truth == grid::kStay;
  o.Require(stays <= 40, "overcooked STAY share " + std::to_string(stays) + "/400");

  const auto equivalence = verify::CheckEquivalence(kEquivalenceStates, kSeed);
  o.Require(equivalence.passed, equivalence.detail);

  const std::map<std::string, double> table1 = {
      {"overcooked", 16.7}, {"kuhn_poker", 50.0}, {"pong", 33.3}};
  std::string accuracies;
  for (const auto& [env, published] : table1) {
    Rng rng(kSeed, 0x61636375);
    const double acc =
        dataset::RandomPredictorAccuracy(built[env].samples, rng, kRandomAccuracyDraws);
    o.Require(std::abs(acc - published) <= kRandomAccuracyTolerance,
              env + " random accuracy " + Fmt("%.1f", acc));
    accuracies += " " + env + " " + Fmt("%.1f", acc);
  }
  o.Note("hanabi P:D:R " + ratio + ", overcooked STAY " + std::to_string(stays) +
         ", random accuracy" + accuracies + ", " + Fmt("%.0f s", Seconds(start)));
  return o;
}

// 8. Determinism and the full verify suite.
Outcome DeterminismCriterion() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& env : RegisteredGames()) {
    const auto r = verify::CheckDeterminism(env, 10, kSeed);
    o.Require(r.passed, env + ": " + r.detail);
  }
  verify::VerifyOptions options;
  options.seed = kSeed;
  int checks = 0;
  for (const auto& r : verify::RunVerify(options)) {
    ++checks;
    o.Require(r.passed, r.module + "/" + r.invariant + ": " + r.detail);
  }
  const double secs = Seconds(start);
  o.Require(secs <= kVerifySeconds, "took " + Fmt("%.0f s", secs));
  o.Note(std::to_string(checks) + " verify checks, " + Fmt("%.0f s", secs));
  return o;
}

}  // namespace
}  // namespace vsarena

int main() {
  using vsarena::Outcome;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"kuhn-equilibrium-oracle", vsarena::KuhnCriterion},
      {"breakthrough-search-hierarchy", vsarena::BreakthroughCriterion},
      {"normalization-cross-checks", vsarena::NormalizationCriterion},
      {"overcooked-oracle", vsarena::OvercookedCriterion},
      {"reward-structure-law", vsarena::StructureCriterion},
      {"hanabi-conservation-and-scoring", vsarena::HanabiCriterion},
      {"dataset-recipes", vsarena::DatasetCriterion},
      {"determinism-and-verify", vsarena::DeterminismCriterion},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.passed;
    std::printf("%s %d %s: %s\n", o.passed ? "PASS" : "FAIL", index, name.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed;
}
