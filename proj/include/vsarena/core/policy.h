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

#ifndef VSARENA_CORE_POLICY_H_
#define VSARENA_CORE_POLICY_H_

#include <cstdint>
#include <string>

#include "vsarena/core/environment.h"
#include "vsarena/core/rng.h"

namespace vsarena {

// A decision-maker for one seat. Policies see the environment (and may
// build observations from it) but must only use information visible to
// their own seat.
class Policy {
 public:
  virtual ~Policy() = default;

  // Token for `agent` at the current state; must be in the legal set.
  virtual std::string Act(const Environment& env, int agent, Rng& rng) = 0;

  // Prediction of the other agent's next action from `agent`'s viewpoint.
  // Only policies backed by an external model implement this.
  virtual std::string PredictOther(const Environment& env, int agent, Rng& rng);

  // Called at the start of every episode.
  virtual void Reset(uint64_t /*seed*/) {}

  virtual std::string name() const = 0;
};

}  // namespace vsarena

#endif  // VSARENA_CORE_POLICY_H_
