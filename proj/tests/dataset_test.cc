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

#include <filesystem>
#include <set>

#include "doctest.h"
#include "vsarena/core/error.h"
#include "vsarena/dataset/dataset.h"
#include "vsarena/games/dilemmas.h"
#include "vsarena/games/registry.h"
#include "vsarena/verify/verify.h"

namespace vsarena::dataset {
namespace {

const Dataset& CoinDataset() {
  static const Dataset d = GenerateDataset(DefaultRecipe("coin_dilemma"), 3);
  return d;
}

TEST_CASE("coin dataset follows its recipe") {
  const auto& d = CoinDataset();
  CHECK(d.samples.size() == kDatasetSize);
  std::vector<int> counts;
  for (const auto& [group, n] : d.GroupCounts()) counts.push_back(n);
  std::sort(counts.rbegin(), counts.rend());
  CHECK(counts == std::vector<int>{100, 100, 50, 50, 50, 50});
  std::set<int> ids;
  int predictor0 = 0;
  for (const auto& s : d.samples) {
    ids.insert(s.id);
    predictor0 += s.predictor == 0;
    CHECK(s.subject == 1 - s.predictor);
    CHECK(std::find(s.legal.begin(), s.legal.end(), s.ground_truth) != s.legal.end());
    CHECK(std::find(s.equivalence_set.begin(), s.equivalence_set.end(), s.ground_truth) !=
          s.equivalence_set.end());
    CHECK(s.frames.size() == 1);
    CHECK(s.step < s.episode_length);
  }
  CHECK(ids.size() == kDatasetSize);
  CHECK(predictor0 == 200);
}

TEST_CASE("generation is deterministic") {
  const auto again = GenerateDataset(DefaultRecipe("coin_dilemma"), 3);
  const auto& d = CoinDataset();
  REQUIRE(again.samples.size() == d.samples.size());
  for (size_t i = 0; i < d.samples.size(); ++i) {
    CHECK(SampleToJson(again.samples[i], {}) == SampleToJson(d.samples[i], {}));
  }
}

TEST_CASE("scoring accepts equivalent tokens and counts missing ones as wrong") {
  const auto& d = CoinDataset();
  std::map<int, std::string> perfect, equivalent, partial;
  for (const auto& s : d.samples) {
    perfect[s.id] = s.ground_truth;
    equivalent[s.id] = s.equivalence_set.back();
    if (s.id % 2 == 0) partial[s.id] = s.ground_truth;
  }
  CHECK(ScorePredictions(d.samples, perfect).accuracy == 100.0);
  CHECK(ScorePredictions(d.samples, equivalent).accuracy == 100.0);
  const auto half = ScorePredictions(d.samples, partial);
  CHECK(half.missing == 200);
  CHECK(half.accuracy == 50.0);
}

TEST_CASE("dataset files round-trip") {
  const auto dir = std::filesystem::temp_directory_path() / "vsarena_dataset_test";
  std::filesystem::remove_all(dir);
  const auto& d = CoinDataset();
  WriteDataset(d, dir.string());
  CHECK(std::filesystem::exists(dir / "manifest.json"));
  CHECK(std::filesystem::exists(dir / "samples.jsonl"));
  const auto back = ReadDataset(dir.string());
  CHECK(back.seed == d.seed);
  REQUIRE(back.samples.size() == d.samples.size());
  for (size_t i = 0; i < d.samples.size(); i += 37) {
    CHECK(back.samples[i].ground_truth == d.samples[i].ground_truth);
    CHECK(back.samples[i].frames == d.samples[i].frames);
    CHECK(back.samples[i].text == d.samples[i].text);
  }
  CHECK(ToJson(back.recipe) == ToJson(d.recipe));
  std::filesystem::remove_all(dir);
}

TEST_CASE("recipes round-trip through JSON and reject bad input") {
  for (const auto& env : BenchmarkGames()) {
    CAPTURE(env);
    const auto recipe = DefaultRecipe(env);
    CHECK(recipe.TotalCount() == kDatasetSize);
    CHECK(ToJson(RecipeFromJson(ToJson(recipe))) == ToJson(recipe));
  }
  auto bad = ToJson(DefaultRecipe("coin_dilemma"));
  bad["groups"][0]["agents"] = {"own-color-coin"};
  CHECK_THROWS_AS(GenerateDataset(RecipeFromJson(bad), 0), Error);
  CHECK_THROWS_AS(DefaultRecipe("tic_tac_toe"), Error);
}

TEST_CASE("kuhn recipe splits 400 samples over nine strategy pairs") {
  const auto recipe = DefaultRecipe("kuhn_poker");
  CHECK(recipe.groups.size() == 9);
  int total = 0;
  for (const auto& g : recipe.groups) {
    CHECK(g.episodes == 600);
    CHECK((g.count == 44 || g.count == 45));
    total += g.count;
  }
  CHECK(total == 400);
}

TEST_CASE("equivalence sets merge moves that go nowhere") {
  grid::DilemmaConfig config;
  grid::DilemmaState s(config, 0);
  s.SetPlayer(0, {0, 0});
  s.SetPlayer(1, {2, 2});
  s.SetItem(0, {4, 4});
  s.SetItem(1, {4, 3});
  auto set = EquivalenceSet(s, 0, grid::kUp);
  std::sort(set.begin(), set.end());
  std::vector<std::string> expected = {grid::kLeft, grid::kStay, grid::kUp};
  std::sort(expected.begin(), expected.end());
  CHECK(set == expected);
  CHECK(EquivalenceSet(s, 0, grid::kRight) == std::vector<std::string>{grid::kRight});
  const auto brute = verify::CheckEquivalence(300, 2);
  CHECK_MESSAGE(brute.passed, brute.detail);
}

}  // namespace
}  // namespace vsarena::dataset
