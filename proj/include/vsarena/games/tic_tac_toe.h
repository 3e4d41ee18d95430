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

#ifndef VSARENA_GAMES_TIC_TAC_TOE_H_
#define VSARENA_GAMES_TIC_TAC_TOE_H_

#include <array>

#include "vsarena/core/game.h"

namespace vsarena::tictactoe {

// Cell contents: 0 empty, 1 X (agent 0), 2 O (agent 1).
// Cells are numbered 0..8 row-major from the top-left; the action token for
// a cell is its digit.
class TicTacToeState : public State {
 public:
  TicTacToeState() = default;

  std::unique_ptr<State> Clone() const override;
  bool IsTerminal() const override;
  int CurrentAgent() const override;
  std::vector<std::string> LegalActions(int agent) const override;
  Transition Apply(const std::vector<std::string>& joint) override;
  std::string Serialize() const override;

  int cell(int index) const { return board_[index]; }
  // 0 or 1 for a completed line, -1 otherwise.
  int Winner() const;
  std::array<double, 2> Returns() const;

 private:
  std::array<int, 9> board_{};
  int moves_ = 0;
};

class TicTacToeGame : public Game {
 public:
  TicTacToeGame();
  const GameSpec& spec() const override { return spec_; }
  std::unique_ptr<State> NewInitialState(uint64_t seed) const override;

 private:
  GameSpec spec_;
};

}  // namespace vsarena::tictactoe

#endif  // VSARENA_GAMES_TIC_TAC_TOE_H_
