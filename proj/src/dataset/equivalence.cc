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

#include "vsarena/dataset/dataset.h"
#include "vsarena/games/dilemmas.h"

namespace vsarena::dataset {

std::vector<std::string> EquivalenceSet(const State& state, int subject,
                                        const std::string& ground_truth) {
  const auto* grid_state = dynamic_cast<const grid::DilemmaState*>(&state);
  if (grid_state == nullptr) return {ground_truth};
  // Players never block each other, so the outcome of a move is fixed by
  // the cell it resolves to.
  const grid::Pos target = grid_state->Resolve(subject, grid::ParseDir(ground_truth));
  std::vector<std::string> out;
  for (const auto& token : state.LegalActions(subject)) {
    if (grid_state->Resolve(subject, grid::ParseDir(token)) == target) out.push_back(token);
  }
  return out;
}

std::vector<std::string> BruteForceEquivalenceSet(const State& state, int subject,
                                                  const std::vector<std::string>& joint) {
  auto reference = state.Clone();
  const Transition expected = reference->Apply(joint);
  const std::string expected_state = reference->Serialize();
  std::vector<std::string> out;
  for (const auto& token : state.LegalActions(subject)) {
    std::vector<std::string> alt = joint;
    alt[subject] = token;
    auto trial = state.Clone();
    const Transition got = trial->Apply(alt);
    if (trial->Serialize() == expected_state && got.events == expected.events &&
        got.rewards == expected.rewards) {
      out.push_back(token);
    }
  }
  return out;
}

}  // namespace vsarena::dataset
