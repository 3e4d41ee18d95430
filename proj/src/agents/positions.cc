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

#include "vsarena/agents/positions.h"

namespace vsarena::agents {

using namespace breakthrough;

BreakthroughPosition::BreakthroughPosition(const Board& board) : board_(board) {
  ResolveStalemate();
}

void BreakthroughPosition::ResolveStalemate() {
  if (board_.Terminal()) return;
  std::vector<Move> moves;
  board_.GenerateMoves(moves);
  if (moves.empty()) board_.winner = Opponent(board_.to_move);
}

void BreakthroughPosition::Moves(std::vector<Move>& out) const { board_.GenerateMoves(out); }

void BreakthroughPosition::Play(Move move) {
  board_.Play(move);
  ResolveStalemate();
}

int BreakthroughPosition::Winner() const {
  return board_.winner == kEmpty ? -1 : AgentForColor(board_.winner);
}

double BreakthroughPosition::Evaluate(int agent) const {
  return breakthrough::Evaluate(board_, ColorForAgent(agent));
}

int BreakthroughPosition::OrderingScore(Move move) const {
  const int mover = board_.to_move;
  const int row = RowOf(move.to);
  const int adv = mover == kWhite ? row : kSize - 1 - row;
  const bool capture = board_.cells[move.to] != kEmpty;
  return (capture ? 16 : 0) + adv;
}

TicTacToePosition::TicTacToePosition(const tictactoe::TicTacToeState& state) {
  for (int i = 0; i < 9; ++i) {
    cells_[i] = state.cell(i);
    if (cells_[i]) ++filled_;
  }
}

TicTacToePosition::TicTacToePosition(const std::array<int, 9>& cells) : cells_(cells) {
  for (int v : cells_) {
    if (v) ++filled_;
  }
}

void TicTacToePosition::Moves(std::vector<Move>& out) const {
  out.clear();
  if (Terminal()) return;
  for (int i = 0; i < 9; ++i) {
    if (cells_[i] == 0) out.push_back(i);
  }
}

void TicTacToePosition::Play(Move move) {
  cells_[move] = ToMove() + 1;
  ++filled_;
}

int TicTacToePosition::Winner() const {
  static constexpr int kLines[8][3] = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6},
                                       {1, 4, 7}, {2, 5, 8}, {0, 4, 8}, {2, 4, 6}};
  for (const auto& line : kLines) {
    const int v = cells_[line[0]];
    if (v != 0 && v == cells_[line[1]] && v == cells_[line[2]]) return v - 1;
  }
  return -1;
}

}  // namespace vsarena::agents
