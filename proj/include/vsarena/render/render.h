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

#ifndef VSARENA_RENDER_RENDER_H_
#define VSARENA_RENDER_RENDER_H_

#include <string>

#include "vsarena/core/game.h"
#include "vsarena/render/canvas.h"

namespace vsarena::render {

// Square frame size for every game except Pong.
inline constexpr int kFrameSize = 512;

// What `agent` sees of `state`. Private information (the agent's own Hanabi
// cards, the opponent's Kuhn card) never appears in either modality.
Canvas RenderImage(const State& state, int agent);
std::string RenderPng(const State& state, int agent);
// Information-equivalent text of the image.
std::string RenderText(const State& state, int agent);

}  // namespace vsarena::render

#endif  // VSARENA_RENDER_RENDER_H_
