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

#include <spdlog/spdlog.h>

#include "vsarena/dataset/dataset.h"

namespace vsarena::dataset {

ScoreReport ScorePredictions(const std::vector<ReasoningSample>& samples,
                             const std::map<int, std::string>& predictions) {
  ScoreReport report;
  report.total = static_cast<int>(samples.size());
  for (const auto& s : samples) {
    auto it = predictions.find(s.id);
    if (it == predictions.end()) {
      ++report.missing;
      continue;
    }
    const auto& set = s.equivalence_set;
    if (std::find(set.begin(), set.end(), it->second) != set.end()) ++report.correct;
  }
  if (report.missing > 0) {
    spdlog::warn("{} of {} samples have no prediction; counted as wrong", report.missing,
                 report.total);
  }
  report.accuracy = report.total == 0 ? 0.0 : 100.0 * report.correct / report.total;
  return report;
}

double RandomPredictorAccuracy(const std::vector<ReasoningSample>& samples, Rng& rng,
                               int repetitions) {
  if (samples.empty() || repetitions < 1) return 0.0;
  long correct = 0;
  for (int r = 0; r < repetitions; ++r) {
    for (const auto& s : samples) {
      const std::string& guess = s.legal[rng.Uniform(s.legal.size())];
      correct += std::find(s.equivalence_set.begin(), s.equivalence_set.end(), guess) !=
                 s.equivalence_set.end();
    }
  }
  return 100.0 * static_cast<double>(correct) /
         (static_cast<double>(samples.size()) * repetitions);
}

}  // namespace vsarena::dataset
