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

#include "vsarena/games/grid_common.h"

#include "vsarena/core/error.h"

namespace vsarena::grid {

const std::vector<std::string>& MoveTokens() {
  static const std::vector<std::string> kTokens = {kUp, kDown, kLeft, kRight, kStay};
  return kTokens;
}

Dir ParseDir(const std::string& token) {
  if (token == kUp) return Dir::kUp;
  if (token == kDown) return Dir::kDown;
  if (token == kLeft) return Dir::kLeft;
  if (token == kRight) return Dir::kRight;
  if (token == kStay) return Dir::kStay;
  throw Error(ErrorCode::kIllegalAction, "grid: unknown movement token " + token);
}

const char* DirToken(Dir d) {
  switch (d) {
    case Dir::kUp: return kUp;
    case Dir::kDown: return kDown;
    case Dir::kLeft: return kLeft;
    case Dir::kRight: return kRight;
    case Dir::kStay: return kStay;
  }
  return kStay;
}

Pos Offset(Pos p, Dir d) {
  switch (d) {
    case Dir::kUp: return {p.x, p.y - 1};
    case Dir::kDown: return {p.x, p.y + 1};
    case Dir::kLeft: return {p.x - 1, p.y};
    case Dir::kRight: return {p.x + 1, p.y};
    case Dir::kStay: return p;
  }
  return p;
}

std::string PosString(Pos p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

Dir StepToward(Pos from, Pos to) {
  if (to.x > from.x) return Dir::kRight;
  if (to.x < from.x) return Dir::kLeft;
  if (to.y > from.y) return Dir::kDown;
  if (to.y < from.y) return Dir::kUp;
  return Dir::kStay;
}

}  // namespace vsarena::grid
