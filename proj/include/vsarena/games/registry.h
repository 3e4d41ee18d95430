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

#ifndef VSARENA_GAMES_REGISTRY_H_
#define VSARENA_GAMES_REGISTRY_H_

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "vsarena/core/game.h"

namespace vsarena {

// Canonical names of every registered environment.
const std::vector<std::string>& RegisteredGames();

// The eight benchmark environments (the mini games excluded).
const std::vector<std::string>& BenchmarkGames();

// Resolves short aliases (kuhn, coin, hunt, battle, ...) to canonical
// names; throws Error(kUnknownEnvironment) listing the registered names.
std::string CanonicalGameName(const std::string& name);

// Builds an environment. Unknown keys in `params` are rejected.
std::shared_ptr<const Game> MakeGame(const std::string& name,
                                     const nlohmann::json& params = nlohmann::json::object());

}  // namespace vsarena

#endif  // VSARENA_GAMES_REGISTRY_H_
