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

#ifndef VSARENA_GAMES_BREAKTHROUGH_H_
#define VSARENA_GAMES_BREAKTHROUGH_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vsarena/core/game.h"

namespace vsarena::breakthrough {

inline constexpr int kSize = 8;

enum Piece : int8_t { kEmpty = 0, kWhite = 1, kBlack = 2 };

// Black moves first, so agent 0 plays Black and agent 1 plays White.
inline int AgentForColor(int color) { return color == kBlack ? 0 : 1; }
inline int ColorForAgent(int agent) { return agent == 0 ? kBlack : kWhite; }
inline int Opponent(int color) { return color == kWhite ? kBlack : kWhite; }
inline const char* ColorName(int color) { return color == kWhite ? "White" : "Black"; }

// Squares are indexed (row - 1) * 8 + column with column a = 0, row 1 = 0.
inline int Square(int column, int row) { return row * kSize + column; }
inline int ColumnOf(int square) { return square % kSize; }
inline int RowOf(int square) { return square / kSize; }

struct Move {
  int8_t from = 0;
  int8_t to = 0;
  bool operator==(const Move&) const = default;
};

std::string MoveToString(Move move);
// Parses the "a2a3" grammar; nullopt when the text does not match
// ^[a-h][1-8][a-h][1-8]$.
std::optional<Move> ParseMove(const std::string& text);
std::string SquareName(int square);

// Value type used by both the environment and the search agents.
struct Board {
  std::array<int8_t, 64> cells{};
  int to_move = kBlack;
  // Color of the winner, or kEmpty while the game is running.
  int winner = kEmpty;

  static Board Initial();

  // Legal moves for the side to move, in lexicographic token order.
  void GenerateMoves(std::vector<Move>& out) const;
  std::vector<Move> LegalMoves() const;
  bool IsLegal(Move move) const;
  // Applies a legal move; sets winner when a piece reaches the far row or
  // the opponent has no pieces left. A side left without legal moves is
  // detected by the caller (an empty move list loses).
  void Play(Move move);
  bool Terminal() const { return winner != kEmpty; }
  int Count(int color) const;
  // Rows advanced from the color's own back row by its most advanced piece;
  // -1 when the color has no pieces.
  int Advancement(int color) const;
  bool operator==(const Board&) const = default;
};

// Depth-cutoff evaluation: difference of the deepest advancements of the
// two sides, divided by 7, from `color`'s point of view.
double Evaluate(const Board& board, int color);

class BreakthroughState : public State {
 public:
  BreakthroughState() : board_(Board::Initial()) {}
  explicit BreakthroughState(const Board& board) : board_(board) {}

  std::unique_ptr<State> Clone() const override;
  bool IsTerminal() const override { return board_.Terminal(); }
  int CurrentAgent() const override;
  std::vector<std::string> LegalActions(int agent) const override;
  Transition Apply(const std::vector<std::string>& joint) override;
  std::string Serialize() const override;

  const Board& board() const { return board_; }
  std::array<double, 2> Returns() const;

 private:
  Board board_;
};

class BreakthroughGame : public Game {
 public:
  BreakthroughGame();
  const GameSpec& spec() const override { return spec_; }
  std::unique_ptr<State> NewInitialState(uint64_t seed) const override;

 private:
  GameSpec spec_;
};

}  // namespace vsarena::breakthrough

#endif  // VSARENA_GAMES_BREAKTHROUGH_H_
