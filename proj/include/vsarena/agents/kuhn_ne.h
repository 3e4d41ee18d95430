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

#ifndef VSARENA_AGENTS_KUHN_NE_H_
#define VSARENA_AGENTS_KUHN_NE_H_

#include <array>
#include <string>
#include <vector>

#include "vsarena/core/policy.h"

namespace vsarena::agents {

// Behavioural strategy for both Kuhn seats: probability of <BET> at each
// information set, indexed by the holder's card (J, Q, K).
struct KuhnStrategy {
  std::array<double, 3> open_bet{};        // seat 0, empty history
  std::array<double, 3> call_after_bet{};  // seat 0, history PB
  std::array<double, 3> bet_after_pass{};  // seat 1, history P
  std::array<double, 3> call_bet{};        // seat 1, history B
};

// The one-parameter equilibrium family; alpha in [0, 1/3].
KuhnStrategy KuhnEquilibrium(double alpha);

double BetProbability(const KuhnStrategy& s, int seat, int card, const std::string& history);

// Exact expected net chips of seat 0 when seat 0 follows `seat0` and seat 1
// follows `seat1`, averaged over the six deals.
double KuhnExpectedValue(const KuhnStrategy& seat0, const KuhnStrategy& seat1);

// The 64 deterministic strategies of a seat (three cards times two
// information sets, one binary choice each).
std::vector<KuhnStrategy> KuhnPureStrategies(int seat);

// Best value `seat` can reach against `opponent` by enumerating every pure
// strategy, and how much that improves on playing `own`.
double KuhnBestResponseValue(int seat, const KuhnStrategy& opponent);
double KuhnBestResponseGain(int seat, const KuhnStrategy& own, const KuhnStrategy& opponent);

class KuhnPolicy : public Policy {
 public:
  explicit KuhnPolicy(KuhnStrategy strategy, std::string name);
  std::string Act(const Environment& env, int agent, Rng& rng) override;
  std::string name() const override { return name_; }

 private:
  KuhnStrategy strategy_;
  std::string name_;
};

std::unique_ptr<Policy> MakeKuhnEquilibriumPolicy(double alpha);

}  // namespace vsarena::agents

#endif  // VSARENA_AGENTS_KUHN_NE_H_
