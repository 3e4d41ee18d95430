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

#include "vsarena/games/breakthrough.h"

#include <algorithm>

#include "vsarena/core/error.h"

namespace vsarena::breakthrough {

std::string SquareName(int square) {
  std::string s;
  s += static_cast<char>('a' + ColumnOf(square));
  s += static_cast<char>('1' + RowOf(square));
  return s;
}

std::string MoveToString(Move move) {
  return SquareName(move.from) + SquareName(move.to);
}

std::optional<Move> ParseMove(const std::string& text) {
  if (text.size() != 4) return std::nullopt;
  auto col_ok = [](char c) { return c >= 'a' && c <= 'h'; };
  auto row_ok = [](char c) { return c >= '1' && c <= '8'; };
  if (!col_ok(text[0]) || !row_ok(text[1]) || !col_ok(text[2]) ||
      !row_ok(text[3])) {
    return std::nullopt;
  }
  Move m;
  m.from = static_cast<int8_t>(Square(text[0] - 'a', text[1] - '1'));
  m.to = static_cast<int8_t>(Square(text[2] - 'a', text[3] - '1'));
  return m;
}

Board Board::Initial() {
  Board b;
  for (int c = 0; c < kSize; ++c) {
    b.cells[Square(c, 0)] = kWhite;
    b.cells[Square(c, 1)] = kWhite;
    b.cells[Square(c, 6)] = kBlack;
    b.cells[Square(c, 7)] = kBlack;
  }
  b.to_move = kBlack;
  return b;
}

void Board::GenerateMoves(std::vector<Move>& out) const {
  out.clear();
  if (Terminal()) return;
  const int dir = to_move == kWhite ? 1 : -1;
  const int opp = Opponent(to_move);
  // Square order (column-major) and destination order (left, straight,
  // right) reproduce lexicographic order of the from-to tokens.
  for (int c = 0; c < kSize; ++c) {
    for (int r = 0; r < kSize; ++r) {
      const int from = Square(c, r);
      if (cells[from] != to_move) continue;
      const int nr = r + dir;
      if (nr < 0 || nr >= kSize) continue;
      for (int dc = -1; dc <= 1; ++dc) {
        const int nc = c + dc;
        if (nc < 0 || nc >= kSize) continue;
        const int to = Square(nc, nr);
        const int dest = cells[to];
        const bool ok = dest == kEmpty || (dc != 0 && dest == opp);
        if (ok) out.push_back({static_cast<int8_t>(from), static_cast<int8_t>(to)});
      }
    }
  }
}

std::vector<Move> Board::LegalMoves() const {
  std::vector<Move> moves;
  GenerateMoves(moves);
  return moves;
}

bool Board::IsLegal(Move move) const {
  auto moves = LegalMoves();
  return std::find(moves.begin(), moves.end(), move) != moves.end();
}

void Board::Play(Move move) {
  const int mover = to_move;
  cells[move.to] = static_cast<int8_t>(mover);
  cells[move.from] = kEmpty;
  const int goal_row = mover == kWhite ? kSize - 1 : 0;
  if (RowOf(move.to) == goal_row || Count(Opponent(mover)) == 0) {
    winner = mover;
  }
  to_move = Opponent(mover);
}

int Board::Count(int color) const {
  return static_cast<int>(std::count(cells.begin(), cells.end(), color));
}

int Board::Advancement(int color) const {
  int best = -1;
  for (int sq = 0; sq < 64; ++sq) {
    if (cells[sq] != color) continue;
    const int adv = color == kWhite ? RowOf(sq) : kSize - 1 - RowOf(sq);
    best = std::max(best, adv);
  }
  return best;
}

double Evaluate(const Board& board, int color) {
  const int mine = std::max(board.Advancement(color), 0);
  const int theirs = std::max(board.Advancement(Opponent(color)), 0);
  return static_cast<double>(mine - theirs) / 7.0;
}

std::unique_ptr<State> BreakthroughState::Clone() const {
  return std::make_unique<BreakthroughState>(*this);
}

int BreakthroughState::CurrentAgent() const {
  if (IsTerminal()) return kTerminalAgent;
  return AgentForColor(board_.to_move);
}

std::vector<std::string> BreakthroughState::LegalActions(int agent) const {
  if (IsTerminal()) return {};
  if (agent != CurrentAgent()) return {kNoopToken};
  std::vector<std::string> legal;
  for (const Move& m : board_.LegalMoves()) legal.push_back(MoveToString(m));
  return legal;
}

std::array<double, 2> BreakthroughState::Returns() const {
  if (!IsTerminal()) return {0.0, 0.0};
  std::array<double, 2> r{-1.0, -1.0};
  r[AgentForColor(board_.winner)] = 1.0;
  return r;
}

Transition BreakthroughState::Apply(const std::vector<std::string>& joint) {
  const int mover = CurrentAgent();
  auto move = ParseMove(joint.at(mover));
  if (!move) {
    throw Error(ErrorCode::kIllegalAction, "breakthrough: unparseable move");
  }
  const bool capture = board_.cells[move->to] != kEmpty;
  const int mover_color = board_.to_move;
  board_.Play(*move);
  // A side that cannot move loses.
  if (!board_.Terminal() && board_.LegalMoves().empty()) {
    board_.winner = mover_color;
  }
  ++step_index_;
  Transition t;
  t.rewards = {0.0, 0.0};
  if (capture) t.events.push_back({"capture", {mover}});
  if (board_.Terminal()) {
    auto r = Returns();
    t.rewards = {r[0], r[1]};
    t.events.push_back({"win", {AgentForColor(board_.winner)}});
  }
  return t;
}

std::string BreakthroughState::Serialize() const {
  std::string s = "breakthrough ";
  for (int r = kSize - 1; r >= 0; --r) {
    for (int c = 0; c < kSize; ++c) s += ".WB"[board_.cells[Square(c, r)]];
    s += '/';
  }
  s += board_.to_move == kWhite ? " w" : " b";
  s += " winner=" + std::to_string(board_.winner);
  return s;
}

BreakthroughGame::BreakthroughGame() {
  spec_.name = "breakthrough";
  spec_.interaction = InteractionClass::kCompetitive;
  spec_.history_depth = 1;
  spec_.action_vocabulary.resize(2);
  for (int agent = 0; agent < 2; ++agent) {
    const int dir = ColorForAgent(agent) == kWhite ? 1 : -1;
    auto& vocab = spec_.action_vocabulary[agent];
    for (int c = 0; c < kSize; ++c) {
      for (int r = 0; r < kSize; ++r) {
        const int nr = r + dir;
        if (nr < 0 || nr >= kSize) continue;
        for (int dc = -1; dc <= 1; ++dc) {
          const int nc = c + dc;
          if (nc < 0 || nc >= kSize) continue;
          vocab.push_back(MoveToString({static_cast<int8_t>(Square(c, r)),
                                        static_cast<int8_t>(Square(nc, nr))}));
        }
      }
    }
    vocab.push_back(kNoopToken);
  }
}

std::unique_ptr<State> BreakthroughGame::NewInitialState(uint64_t) const {
  return std::make_unique<BreakthroughState>();
}

}  // namespace vsarena::breakthrough
