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

#include "doctest.h"
#include "vsarena/games/dilemmas.h"
#include "vsarena/verify/verify.h"

namespace vsarena::verify {
namespace {

TEST_CASE("a reward-table typo is reported by row") {
  grid::DilemmaConfig config;
  config.kind = grid::DilemmaKind::kMonsterHunt;
  config.rewards = grid::DefaultRewardTable(config.kind);
  config.rewards["apple/red"] = {3, 0};
  const auto r = CheckRewardTable(std::make_shared<grid::DilemmaGame>(config), 50, 1);
  CHECK_FALSE(r.passed);
  CHECK(r.detail.find("apple/red") != std::string::npos);

  config.rewards = grid::DefaultRewardTable(config.kind);
  CHECK(CheckRewardTable(std::make_shared<grid::DilemmaGame>(config), 50, 1).passed);
}

TEST_CASE("invariant checks pass on the shipped environments") {
  CHECK(CheckRewardStructure("coin_dilemma", 30, 2).passed);
  CHECK(CheckRewardStructure("overcooked", 30, 2).passed);
  CHECK(CheckRewardStructure("kuhn_poker", 30, 2).passed);
  CHECK(CheckHanabiConservation(20, 2).passed);
  CHECK(CheckHanabiScoring().passed);
  CHECK(CheckOvercookedOracle().passed);
  CHECK(CheckPongInvariants(10, 2).passed);
  CHECK(CheckDeterminism("breakthrough", 2, 2).passed);
  CHECK(CheckAlphaBeta(5, 2, 2).passed);
}

TEST_CASE("quick suite is green and names every check") {
  VerifyOptions options;
  options.quick = true;
  int seen = 0;
  const auto results = RunVerify(options, [&](const CheckResult&) { ++seen; });
  CHECK(seen == static_cast<int>(results.size()));
  for (const auto& r : results) {
    CAPTURE(r.module);
    CAPTURE(r.invariant);
    CHECK_MESSAGE(r.passed, r.detail);
    CHECK_FALSE(r.module.empty());
    CHECK_FALSE(r.invariant.empty());
  }
}

}  // namespace
}  // namespace vsarena::verify
