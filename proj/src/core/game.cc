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

#include "vsarena/core/game.h"

namespace vsarena {

const char* InteractionClassName(InteractionClass c) {
  switch (c) {
    case InteractionClass::kCooperative: return "cooperative";
    case InteractionClass::kCompetitive: return "competitive";
    case InteractionClass::kMixed: return "mixed";
  }
  return "unknown";
}

nlohmann::json ToJson(const GameSpec& spec) {
  nlohmann::json j;
  j["name"] = spec.name;
  j["num_agents"] = spec.num_agents;
  j["interaction_class"] = InteractionClassName(spec.interaction);
  j["max_steps"] = spec.max_steps;
  j["discount"] = spec.discount;
  j["history_depth"] = spec.history_depth;
  j["action_vocabulary"] = spec.action_vocabulary;
  return j;
}

std::string EventTag(const GameEvent& event) {
  std::string tag = event.kind;
  if (!event.actors.empty()) {
    tag += "@";
    for (size_t i = 0; i < event.actors.size(); ++i) {
      if (i) tag += "+";
      tag += std::to_string(event.actors[i]);
    }
  }
  return tag;
}

}  // namespace vsarena
