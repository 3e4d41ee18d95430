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

#ifndef VSARENA_GAMES_GRID_COMMON_H_
#define VSARENA_GAMES_GRID_COMMON_H_

#include <array>
#include <cstdlib>
#include <string>
#include <vector>

namespace vsarena::grid {

// (x, y) with x growing rightwards and y growing downwards; (0, 0) is the
// top-left cell.
struct Pos {
  int x = 0;
  int y = 0;
  bool operator==(const Pos&) const = default;
  auto operator<=>(const Pos&) const = default;
};

inline int Manhattan(Pos a, Pos b) { return std::abs(a.x - b.x) + std::abs(a.y - b.y); }

enum class Dir { kUp, kDown, kLeft, kRight, kStay };

inline constexpr char kUp[] = "<UP>";
inline constexpr char kDown[] = "<DOWN>";
inline constexpr char kLeft[] = "<LEFT>";
inline constexpr char kRight[] = "<RIGHT>";
inline constexpr char kStay[] = "<STAY>";
inline constexpr char kInteract[] = "<INTERACT>";

const std::vector<std::string>& MoveTokens();
Dir ParseDir(const std::string& token);
const char* DirToken(Dir d);
Pos Offset(Pos p, Dir d);
std::string PosString(Pos p);

// Greedy Manhattan step from `from` towards `to`: horizontal axis first,
// STAY when already there.
Dir StepToward(Pos from, Pos to);

}  // namespace vsarena::grid

#endif  // VSARENA_GAMES_GRID_COMMON_H_
