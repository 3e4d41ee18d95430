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

#ifndef VSARENA_VERIFY_VERIFY_H_
#define VSARENA_VERIFY_VERIFY_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "vsarena/agents/kuhn_ne.h"
#include "vsarena/core/game.h"

namespace vsarena::verify {

struct CheckResult {
  std::string module;
  std::string invariant;
  bool passed = true;
  std::string detail;
  uint64_t seed = 0;
  double seconds = 0.0;
};

// Random-policy episodes: cooperative envs give both agents the same reward
// every step, competitive envs end zero-sum, and a mixed env shows a step
// that is neither.
CheckResult CheckRewardStructure(const std::string& env, int episodes, uint64_t seed);

// Every step's rewards match the published event table for the dilemmas.
CheckResult CheckRewardTable(std::shared_ptr<const Game> game, int episodes, uint64_t seed);

// Mixed-game returns rebuilt from event counters equal the raw returns.
CheckResult CheckCounterConsistency(const std::string& env, int episodes, uint64_t seed);

// The 50-card multiset is conserved at every step and the cumulative
// reward equals the firework sum.
CheckResult CheckHanabiConservation(int episodes, uint64_t seed);

// A stacked-deck completion scores 25; losing all lives after a success
// gives standard 0 and firework > 0.
CheckResult CheckHanabiScoring();

// NE-vs-NE value of seat 0 is -1/18 and no pure deviation gains more than
// `tolerance`, for each alpha. `family` defaults to KuhnEquilibrium.
CheckResult CheckKuhnEquilibrium(
    const std::vector<double>& alphas, double tolerance = 1e-12,
    std::function<agents::KuhnStrategy(double)> family = agents::KuhnEquilibrium);

// Fast equivalence sets equal brute-force simulation on random states.
CheckResult CheckEquivalence(int states, uint64_t seed);

// Trajectories replay byte-identically and frames render identically.
CheckResult CheckDeterminism(const std::string& env, int episodes, uint64_t seed);

// Alpha-beta returns the same move and value as plain minimax.
CheckResult CheckAlphaBeta(int positions, int depth, uint64_t seed);

// Every baseline policy returns a legal token on random states.
CheckResult CheckPolicyLegality(int states, uint64_t seed);

// Scores stay within 0..3, at most 5 points per episode, ball in court.
CheckResult CheckPongInvariants(int episodes, uint64_t seed);

// The scripted pair scores 40 with two deliveries; a soup cooked with two
// onions is plated but earns no delivery reward.
CheckResult CheckOvercookedOracle();

struct VerifyOptions {
  uint64_t seed = 0;
  int episodes = 1000;
  // Reduced counts for smoke runs.
  bool quick = false;
};

std::vector<CheckResult> RunVerify(const VerifyOptions& options,
                                   const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace vsarena::verify

#endif  // VSARENA_VERIFY_VERIFY_H_
