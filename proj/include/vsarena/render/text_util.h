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

#ifndef VSARENA_RENDER_TEXT_UTIL_H_
#define VSARENA_RENDER_TEXT_UTIL_H_

#include <string>

#include "vsarena/games/hanabi.h"

namespace vsarena::render {

// "+2", "-1", "+0.5".
std::string SignedNumber(double v);
// "[colors RY; ranks 12]".
std::string KnowledgeString(const hanabi::CardKnowledge& k, const hanabi::HanabiConfig& config);
// "R3".
std::string CardString(const hanabi::Card& card, const hanabi::HanabiConfig& config);

}  // namespace vsarena::render

#endif  // VSARENA_RENDER_TEXT_UTIL_H_
