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

#include <algorithm>
#include <cmath>
#include <map>
#include <functional>
#include <numeric>
#include <tuple>

#include "vsarena/agents/baselines.h"
#include "vsarena/agents/factory.h"
#include "vsarena/core/environment.h"
#include "vsarena/core/error.h"
#include "vsarena/core/runner.h"
#include "vsarena/dataset/dataset.h"
#include "vsarena/games/grid_common.h"
#include "vsarena/games/registry.h"

namespace vsarena::dataset {
namespace {

// Plays uniformly at random for the first `plies` steps of the game.
class OpeningPolicy : public Policy {
 public:
  OpeningPolicy(std::unique_ptr<Policy> inner, int plies)
      : inner_(std::move(inner)), plies_(plies) {}

  std::string Act(const Environment& env, int agent, Rng& rng) override {
    if (env.step_index() < plies_) {
      const auto legal = env.LegalActions(agent);
      return legal[rng.Uniform(legal.size())];
    }
    return inner_->Act(env, agent, rng);
  }
  void Reset(uint64_t seed) override { inner_->Reset(seed); }
  std::string name() const override { return inner_->name(); }

 private:
  std::unique_ptr<Policy> inner_;
  int plies_;
};

struct Candidate {
  int group = 0;
  int episode = 0;
  int step = 0;
  int predictor = 0;
  int subject = 1;
  int decile = 0;
  int type = 0;  // Index into the action ratio.
  bool stay = false;
};

struct Episode {
  uint64_t seed = 0;
  std::vector<std::vector<std::string>> actions;
};

int HanabiType(const std::string& token) {
  if (token.rfind("<PLAY", 0) == 0) return 0;
  if (token.rfind("<DISCARD", 0) == 0) return 1;
  return 2;
}

const char* kHanabiTypes[] = {"play", "discard", "reveal"};

// Splits `n` over groups proportionally to `weights` without exceeding each
// group's capacity. Remainders go to the largest fractional parts; `turn`
// rotates which group wins exact ties.
std::vector<int> Allocate(int n, const std::vector<double>& weights,
                          const std::vector<int>& capacity, int turn) {
  const size_t k = weights.size();
  std::vector<int> quota(k, 0);
  std::vector<bool> open(k);
  for (size_t i = 0; i < k; ++i) open[i] = capacity[i] > 0 && weights[i] > 0;
  int left = n;
  while (left > 0) {
    double total = 0;
    for (size_t i = 0; i < k; ++i) {
      if (open[i]) total += weights[i];
    }
    if (total <= 0) break;
    std::vector<double> ideal(k, 0.0);
    std::vector<int> add(k, 0);
    int given = 0;
    for (size_t i = 0; i < k; ++i) {
      if (!open[i]) continue;
      ideal[i] = left * weights[i] / total;
      add[i] = static_cast<int>(std::floor(ideal[i] + 1e-9));
      given += add[i];
    }
    std::vector<size_t> order;
    for (size_t i = 0; i < k; ++i) {
      if (open[i]) order.push_back(i);
    }
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      const double fa = ideal[a] - add[a], fb = ideal[b] - add[b];
      if (std::abs(fa - fb) > 1e-9) return fa > fb;
      return (a + k - turn % k) % k < (b + k - turn % k) % k;
    });
    for (size_t j = 0; given < left && j < order.size(); ++j) {
      ++add[order[j]];
      ++given;
    }
    bool capped = false;
    for (size_t i = 0; i < k; ++i) {
      if (!open[i]) continue;
      const int room = capacity[i] - quota[i];
      if (add[i] >= room) {
        add[i] = room;
        open[i] = false;
        capped = true;
      }
      quota[i] += add[i];
      left -= add[i];
    }
    if (!capped) break;
  }
  if (left > 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "dataset: candidate pool too small for the requested balance");
  }
  return quota;
}

// One balancing dimension: candidates are split by `key` and the quota by
// `weights` (indexed by key). `max_share` caps key 1 (STAY) when positive.
struct Level {
  std::function<int(const Candidate&)> key;
  std::vector<double> weights;
  double max_share = -1.0;
};

void Select(const std::vector<Candidate>& all, std::vector<int> pool, int n,
            const std::vector<Level>& levels, size_t depth, Rng& rng, int& turn,
            std::vector<int>& out) {
  if (n == 0) return;
  if (depth == levels.size()) {
    if (static_cast<int>(pool.size()) < n) {
      throw Error(ErrorCode::kInvalidArgument, "dataset: candidate pool too small");
    }
    rng.Shuffle(pool);
    out.insert(out.end(), pool.begin(), pool.begin() + n);
    return;
  }
  const Level& level = levels[depth];
  const size_t k = level.weights.size();
  std::vector<std::vector<int>> parts(k);
  for (int idx : pool) parts[level.key(all[idx])].push_back(idx);
  std::vector<int> capacity(k);
  for (size_t i = 0; i < k; ++i) capacity[i] = static_cast<int>(parts[i].size());
  if (level.max_share >= 0) {
    capacity[1] = std::min(capacity[1], static_cast<int>(std::floor(level.max_share * n)));
  }
  const auto quota = Allocate(n, level.weights, capacity, turn++);
  for (size_t i = 0; i < k; ++i) {
    Select(all, std::move(parts[i]), quota[i], levels, depth + 1, rng, turn, out);
  }
}

}  // namespace

std::map<std::string, int> Dataset::GroupCounts() const {
  std::map<std::string, int> counts;
  for (const auto& s : samples) ++counts[s.group];
  return counts;
}

Dataset GenerateDataset(const DatasetRecipe& recipe, uint64_t seed) {
  const std::string env_name = CanonicalGameName(recipe.env);
  auto game = MakeGame(env_name, recipe.game_params);
  const bool hanabi = env_name == "hanabi" || env_name == "tiny_hanabi";
  if (recipe.frames < 1) throw Error(ErrorCode::kConfig, "dataset: frames must be positive");
  if (!recipe.action_ratio.empty() && recipe.action_ratio.size() != 3) {
    throw Error(ErrorCode::kConfig, "dataset: action_ratio needs three weights");
  }

  std::vector<Candidate> candidates;
  std::vector<std::vector<Episode>> episodes(recipe.groups.size());
  for (size_t g = 0; g < recipe.groups.size(); ++g) {
    const RecipeGroup& group = recipe.groups[g];
    if (group.agents.size() != 2) {
      throw Error(ErrorCode::kConfig, "dataset: group " + group.label + " needs two agents");
    }
    std::vector<std::unique_ptr<Policy>> owned;
    std::vector<Policy*> policies;
    for (const auto& spec : group.agents) {
      auto policy = agents::MakePolicy(agents::ParseAgentSpec(spec), env_name);
      if (group.opening_random_plies > 0) {
        policy = std::make_unique<OpeningPolicy>(std::move(policy), group.opening_random_plies);
      }
      policies.push_back(policy.get());
      owned.push_back(std::move(policy));
    }
    for (int e = 0; e < group.episodes; ++e) {
      const uint64_t episode_seed = MixSeed(MixSeed(seed, g + 1), e + 1);
      Trajectory traj = RunEpisode(game, episode_seed, policies);
      Episode episode{episode_seed, traj.ActionList()};
      const int length = static_cast<int>(episode.actions.size());
      auto state = game->NewInitialState(episode_seed);
      for (int t = 0; t < length; ++t) {
        const auto& joint = episode.actions[t];
        if (t >= group.opening_random_plies) {
          for (int subject = 0; subject < 2; ++subject) {
            const std::string& truth = joint[subject];
            if (truth == kNoopToken) continue;
            if (recipe.subject >= 0 && subject != recipe.subject) continue;
            Candidate c;
            c.group = static_cast<int>(g);
            c.episode = e;
            c.step = t;
            c.subject = subject;
            c.predictor = 1 - subject;
            c.decile = std::min(9, 10 * t / std::max(1, length));
            c.stay = truth == grid::kStay;
            if (hanabi) {
              c.type = HanabiType(truth);
              if (recipe.exclude_reveals && c.type == 2) continue;
            }
            if (recipe.filter_ineffective && !c.stay) {
              // A move is ineffective when replacing it by STAY changes nothing.
              auto with = state->Clone();
              auto without = state->Clone();
              std::vector<std::string> idle = joint;
              idle[subject] = grid::kStay;
              const Transition a = with->Apply(joint);
              const Transition b = without->Apply(idle);
              if (with->Serialize() == without->Serialize() && a.events == b.events) continue;
            }
            candidates.push_back(c);
          }
        }
        state->Apply(joint);
      }
      episodes[g].push_back(std::move(episode));
    }
  }

  std::vector<Level> levels;
  if (!recipe.action_ratio.empty()) {
    std::vector<double> weights = recipe.action_ratio;
    if (recipe.exclude_reveals) weights[2] = 0.0;
    levels.push_back({[](const Candidate& c) { return c.type; }, weights});
  }
  if (recipe.balance_predictor) {
    levels.push_back({[](const Candidate& c) { return c.predictor; }, {1.0, 1.0}});
  }
  if (recipe.stay_cap >= 0) {
    // Weights follow the pool so STAY keeps its natural share up to the cap.
    levels.push_back({[](const Candidate& c) { return c.stay ? 1 : 0; }, {}, recipe.stay_cap});
  }
  if (recipe.stratify_steps) {
    levels.push_back({[](const Candidate& c) { return c.decile; }, std::vector<double>(10, 1.0)});
  }

  Rng rng(seed, 0x73616d70);
  int turn = 0;
  std::vector<int> chosen;
  for (size_t g = 0; g < recipe.groups.size(); ++g) {
    std::vector<int> pool;
    for (size_t i = 0; i < candidates.size(); ++i) {
      if (candidates[i].group == static_cast<int>(g)) pool.push_back(static_cast<int>(i));
    }
    std::vector<Level> group_levels = levels;
    for (auto& level : group_levels) {
      if (!level.weights.empty()) continue;
      double stay = 0;
      for (int idx : pool) stay += candidates[idx].stay;
      const double share = pool.empty() ? 0.0 : stay / pool.size();
      level.weights = {1.0 - share, share};
    }
    try {
      Select(candidates, std::move(pool), recipe.groups[g].count, group_levels, 0, rng, turn,
             chosen);
    } catch (const Error& e) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(e.what()) + " (group " + recipe.groups[g].label + ")");
    }
  }

  // Materialize observations by replaying each episode once.
  std::sort(chosen.begin(), chosen.end(), [&](int a, int b) {
    const Candidate& x = candidates[a];
    const Candidate& y = candidates[b];
    return std::tie(x.group, x.episode, x.step, x.predictor) <
           std::tie(y.group, y.episode, y.step, y.predictor);
  });
  Dataset dataset;
  dataset.recipe = recipe;
  dataset.recipe.env = env_name;
  dataset.seed = seed;
  Environment env(game);
  size_t i = 0;
  while (i < chosen.size()) {
    const Candidate& first = candidates[chosen[i]];
    const Episode& episode = episodes[first.group][first.episode];
    env.Reset(episode.seed);
    for (; i < chosen.size(); ++i) {
      const Candidate& c = candidates[chosen[i]];
      if (c.group != first.group || c.episode != first.episode) break;
      while (env.step_index() < c.step) env.Step(episode.actions[env.step_index()]);
      ReasoningSample s;
      s.env = env_name;
      s.group = recipe.groups[c.group].label;
      s.episode_seed = episode.seed;
      s.step = c.step;
      s.episode_length = static_cast<int>(episode.actions.size());
      s.predictor = c.predictor;
      s.subject = c.subject;
      s.frames = env.ObserveFrames(c.predictor, recipe.frames);
      s.text = env.ObserveText(c.predictor);
      s.legal = env.LegalActions(c.subject);
      s.ground_truth = episode.actions[c.step][c.subject];
      s.equivalence_set = EquivalenceSet(env.state(), c.subject, s.ground_truth);
      if (hanabi) s.action_type = kHanabiTypes[c.type];
      dataset.samples.push_back(std::move(s));
    }
  }
  rng.Shuffle(dataset.samples);
  for (size_t k = 0; k < dataset.samples.size(); ++k) dataset.samples[k].id = static_cast<int>(k);
  return dataset;
}

}  // namespace vsarena::dataset
