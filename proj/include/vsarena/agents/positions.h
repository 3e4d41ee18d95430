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

#ifndef VSARENA_AGENTS_POSITIONS_H_
#define VSARENA_AGENTS_POSITIONS_H_

#include <array>
#include <string>
#include <vector>

#include "vsarena/games/breakthrough.h"
#include "vsarena/games/tic_tac_toe.h"

namespace vsarena::agents {

// Lightweight copy-make positions used by the search agents. Each exposes
//   Moves(out)         legal moves in canonical (token) order
//   Play(move)
//   Terminal(), Winner() (agent index or -1 for a draw), ToMove()
//   Evaluate(agent)    heuristic in [-1, 1] for depth cutoffs
//   MoveToken(move)

class BreakthroughPosition {
 public:
  using Move = breakthrough::Move;

  explicit BreakthroughPosition(const breakthrough::Board& board);

  void Moves(std::vector<Move>& out) const;
  void Play(Move move);
  bool Terminal() const { return board_.Terminal(); }
  int Winner() const;
  int ToMove() const { return breakthrough::AgentForColor(board_.to_move); }
  double Evaluate(int agent) const;
  // Captures and deep advances first; used for pruning efficiency only.
  int OrderingScore(Move move) const;
  static std::string MoveToken(Move move) { return breakthrough::MoveToString(move); }
  const breakthrough::Board& board() const { return board_; }

 private:
  // Marks the side to move as lost when it has no legal move.
  void ResolveStalemate();

  breakthrough::Board board_;
};

class TicTacToePosition {
 public:
  using Move = int;

  TicTacToePosition() = default;
  explicit TicTacToePosition(const tictactoe::TicTacToeState& state);
  explicit TicTacToePosition(const std::array<int, 9>& cells);

  void Moves(std::vector<Move>& out) const;
  void Play(Move move);
  bool Terminal() const { return Winner() >= 0 || filled_ == 9; }
  int Winner() const;
  int ToMove() const { return filled_ % 2; }
  double Evaluate(int) const { return 0.0; }
  int OrderingScore(Move) const { return 0; }
  static std::string MoveToken(Move move) { return std::to_string(move); }
  const std::array<int, 9>& cells() const { return cells_; }

 private:
  std::array<int, 9> cells_{};
  int filled_ = 0;
};

}  // namespace vsarena::agents

#endif  // VSARENA_AGENTS_POSITIONS_H_
