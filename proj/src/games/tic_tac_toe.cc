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

#include "vsarena/games/tic_tac_toe.h"

namespace vsarena::tictactoe {

namespace {
constexpr int kLines[8][3] = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6},
                              {1, 4, 7}, {2, 5, 8}, {0, 4, 8}, {2, 4, 6}};
}

std::unique_ptr<State> TicTacToeState::Clone() const {
  return std::make_unique<TicTacToeState>(*this);
}

int TicTacToeState::Winner() const {
  for (const auto& line : kLines) {
    const int v = board_[line[0]];
    if (v != 0 && v == board_[line[1]] && v == board_[line[2]]) return v - 1;
  }
  return -1;
}

bool TicTacToeState::IsTerminal() const { return Winner() >= 0 || moves_ == 9; }

int TicTacToeState::CurrentAgent() const {
  return IsTerminal() ? kTerminalAgent : moves_ % 2;
}

std::vector<std::string> TicTacToeState::LegalActions(int agent) const {
  if (IsTerminal()) return {};
  if (agent != CurrentAgent()) return {kNoopToken};
  std::vector<std::string> legal;
  for (int i = 0; i < 9; ++i) {
    if (board_[i] == 0) legal.push_back(std::to_string(i));
  }
  return legal;
}

std::array<double, 2> TicTacToeState::Returns() const {
  const int w = Winner();
  if (w < 0) return {0.0, 0.0};
  std::array<double, 2> r{-1.0, -1.0};
  r[w] = 1.0;
  return r;
}

Transition TicTacToeState::Apply(const std::vector<std::string>& joint) {
  const int mover = CurrentAgent();
  const int cell = std::stoi(joint.at(mover));
  board_[cell] = mover + 1;
  ++moves_;
  ++step_index_;
  Transition t;
  t.rewards = {0.0, 0.0};
  if (IsTerminal()) {
    auto r = Returns();
    t.rewards = {r[0], r[1]};
    const int w = Winner();
    if (w >= 0) {
      t.events.push_back({"three-in-a-row", {w}});
    } else {
      t.events.push_back({"draw", {}});
    }
  }
  return t;
}

std::string TicTacToeState::Serialize() const {
  std::string s = "tictactoe ";
  for (int v : board_) s += ".XO"[v];
  return s;
}

TicTacToeGame::TicTacToeGame() {
  spec_.name = "tic_tac_toe";
  spec_.interaction = InteractionClass::kCompetitive;
  spec_.max_steps = 9;
  std::vector<std::string> vocab;
  for (int i = 0; i < 9; ++i) vocab.push_back(std::to_string(i));
  vocab.push_back(kNoopToken);
  spec_.action_vocabulary = {vocab, vocab};
}

std::unique_ptr<State> TicTacToeGame::NewInitialState(uint64_t) const {
  return std::make_unique<TicTacToeState>();
}

}  // namespace vsarena::tictactoe
