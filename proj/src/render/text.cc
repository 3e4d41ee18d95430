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

#include <cmath>
#include <sstream>

#include "vsarena/core/error.h"
#include "vsarena/games/breakthrough.h"
#include "vsarena/games/dilemmas.h"
#include "vsarena/games/hanabi.h"
#include "vsarena/games/kuhn_poker.h"
#include "vsarena/games/overcooked.h"
#include "vsarena/games/pong.h"
#include "vsarena/games/tic_tac_toe.h"
#include "vsarena/render/render.h"
#include "vsarena/render/text_util.h"

namespace vsarena::render {

std::string SignedNumber(double v) {
  std::ostringstream out;
  if (v >= 0) out << "+";
  if (std::floor(v) == v) {
    out << static_cast<long long>(v);
  } else {
    out << v;
  }
  return out.str();
}

std::string KnowledgeString(const hanabi::CardKnowledge& k, const hanabi::HanabiConfig& config) {
  std::string colors, ranks;
  for (int c = 0; c < config.num_colors(); ++c) {
    if (k.colors & (1u << c)) colors += config.color_letters[c];
  }
  for (int r = 1; r <= config.num_ranks; ++r) {
    if (k.ranks & (1u << (r - 1))) ranks += std::to_string(r);
  }
  return "[colors " + colors + "; ranks " + ranks + "]";
}

std::string CardString(const hanabi::Card& card, const hanabi::HanabiConfig& config) {
  return std::string(1, config.color_letters[card.color]) + std::to_string(card.rank);
}

namespace {

std::string HanabiText(const hanabi::HanabiState& s, int agent) {
  const auto& config = s.config();
  std::ostringstream out;
  out << "Hanabi. You are player " << agent << ". ";
  if (s.IsTerminal()) {
    out << "Game over.\n";
  } else {
    out << "Player " << s.CurrentAgent() << " to act.\n";
  }
  out << "Info tokens: " << s.info_tokens() << "/" << config.max_info_tokens
      << ". Life tokens: " << s.life_tokens() << "/" << config.max_life_tokens
      << ". Deck: " << s.deck().size() << " cards.\n";
  if (s.final_round_counter() >= 0) {
    out << "Final round: " << s.final_round_counter() << " turns left.\n";
  }
  out << "Fireworks:";
  for (int c = 0; c < config.num_colors(); ++c) {
    out << " " << config.color_letters[c] << s.fireworks()[c];
  }
  out << "\nDiscard pile:";
  if (s.discard_pile().empty()) out << " (empty)";
  for (const auto& card : s.discard_pile()) out << " " << CardString(card, config);
  out << "\n";
  for (int p = 0; p < 2; ++p) {
    out << "Recent actions of player " << p << ":";
    const auto& recent = s.recent_actions(p);
    if (recent.empty()) out << " (none)";
    for (size_t i = 0; i < recent.size(); ++i) out << (i ? ", " : " ") << recent[i];
    out << "\n";
  }
  out << "Your hand:";
  for (size_t i = 0; i < s.hand(agent).size(); ++i) {
    out << (i ? ", " : " ") << "slot " << i << " ?? "
        << KnowledgeString(s.knowledge(agent)[i], config);
  }
  out << "\nPartner hand:";
  const int partner = 1 - agent;
  for (size_t i = 0; i < s.hand(partner).size(); ++i) {
    out << (i ? ", " : " ") << "slot " << i << " " << CardString(s.hand(partner)[i], config)
        << " " << KnowledgeString(s.knowledge(partner)[i], config);
  }
  out << "\n";
  return out.str();
}

std::string BreakthroughText(const breakthrough::BreakthroughState& s, int agent) {
  using namespace breakthrough;
  const Board& b = s.board();
  std::ostringstream out;
  out << "Breakthrough. You play " << ColorName(ColorForAgent(agent)) << ". ";
  if (b.Terminal()) {
    out << ColorName(b.winner) << " wins.\n";
  } else {
    out << ColorName(b.to_move) << " to move.\n";
  }
  out << "Board (row 8 at the top, column h on the right; W White, B Black, . empty):\n";
  for (int row = kSize - 1; row >= 0; --row) {
    out << row + 1;
    for (int col = 0; col < kSize; ++col) {
      const int p = b.cells[Square(col, row)];
      out << " " << (p == kWhite ? 'W' : p == kBlack ? 'B' : '.');
    }
    out << "\n";
  }
  out << "  a b c d e f g h\n";
  for (int color : {static_cast<int>(kWhite), static_cast<int>(kBlack)}) {
    out << ColorName(color) << ":";
    bool first = true;
    // Column-major so the list reads a1, a2, ..., h8.
    for (int col = 0; col < kSize; ++col) {
      for (int row = 0; row < kSize; ++row) {
        if (b.cells[Square(col, row)] != color) continue;
        out << (first ? " " : ", ") << SquareName(Square(col, row));
        first = false;
      }
    }
    if (first) out << " (none)";
    out << "\n";
  }
  return out.str();
}

std::string KuhnText(const kuhn::KuhnState& s, int agent) {
  std::ostringstream out;
  out << "Kuhn Poker. You are player " << agent << ". ";
  if (s.IsTerminal()) {
    out << "Hand over.\n";
  } else {
    out << "Player " << s.CurrentAgent() << " to act.\n";
  }
  out << "Your card: " << kuhn::CardLetter(s.card(agent)) << ".\n";
  out << "Pot: " << s.pot() << " chips (you " << s.contribution(agent) << ", opponent "
      << s.contribution(1 - agent) << ").\n";
  out << "History:";
  if (s.history().empty()) out << " (empty)";
  for (size_t i = 0; i < s.history().size(); ++i) {
    out << " P" << (i % 2) << " " << (s.history()[i] == 'B' ? kuhn::kBet : kuhn::kPass);
  }
  out << "\n";
  return out.str();
}

std::string TicTacToeText(const tictactoe::TicTacToeState& s, int agent) {
  std::ostringstream out;
  out << "Tic-Tac-Toe. You play " << (agent == 0 ? 'X' : 'O') << ". ";
  if (s.IsTerminal()) {
    const int w = s.Winner();
    if (w < 0) {
      out << "Draw.\n";
    } else {
      out << (w == 0 ? 'X' : 'O') << " wins.\n";
    }
  } else {
    out << (s.CurrentAgent() == 0 ? 'X' : 'O') << " to move.\n";
  }
  out << "Board (cells 0-8 row by row from the top-left):\n";
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const int v = s.cell(r * 3 + c);
      out << (v == 1 ? 'X' : v == 2 ? 'O' : '.');
    }
    out << "\n";
  }
  return out.str();
}

std::string DilemmaTitle(grid::DilemmaKind kind) {
  switch (kind) {
    case grid::DilemmaKind::kCoinDilemma: return "Coin Dilemma";
    case grid::DilemmaKind::kMonsterHunt: return "Monster Hunt";
    case grid::DilemmaKind::kBattleOfColors: return "Battle of the Colors";
  }
  return "";
}

std::string DilemmaText(const grid::DilemmaState& s, int agent) {
  using grid::PosString;
  const auto& config = s.config();
  std::ostringstream out;
  out << DilemmaTitle(s.kind()) << ". You are the " << grid::AgentColorName(agent)
      << " player. Step " << s.step_index() << " of " << config.horizon << ".\n";
  out << "Grid: " << config.width << "x" << config.height
      << "; positions are (column, row) from the top-left corner.\n";
  out << "Red player: " << PosString(s.player(0)) << "\n";
  out << "Blue player: " << PosString(s.player(1)) << "\n";
  switch (s.kind()) {
    case grid::DilemmaKind::kCoinDilemma:
      out << "Red coin: " << PosString(s.items()[0]) << "\n";
      out << "Blue coin: " << PosString(s.items()[1]) << "\n";
      break;
    case grid::DilemmaKind::kMonsterHunt:
      out << "Apple: " << PosString(s.items()[0]) << "\n";
      out << "Apple: " << PosString(s.items()[1]) << "\n";
      out << "Monster: " << PosString(s.monster()) << "\n";
      break;
    case grid::DilemmaKind::kBattleOfColors:
      out << "Red block: " << PosString(s.items()[0]) << "\n";
      out << "Blue block: " << PosString(s.items()[1]) << "\n";
      break;
  }
  out << "Events (count; red reward, blue reward):\n";
  for (const auto& [key, row] : config.rewards) {
    out << grid::RowDescription(key) << ": " << s.counters().at(key) << " ("
        << SignedNumber(row[0]) << ", " << SignedNumber(row[1]) << ")\n";
  }
  return out.str();
}

std::string PotString(const overcooked::Pot& pot, const overcooked::OvercookedConfig& c) {
  std::string s = std::to_string(pot.onions) + " onions, ";
  if (pot.cooked) return s + "soup ready";
  if (pot.cooking) {
    return s + "cooking " + std::to_string(pot.timer) + "/" + std::to_string(c.cook_time);
  }
  return s + "idle";
}

std::string OvercookedText(const overcooked::OvercookedState& s, int agent) {
  const auto& layout = s.layout();
  std::ostringstream out;
  out << "Overcooked. You are chef " << agent << ". Step " << s.step_index() << " of "
      << s.config().horizon << ".\n";
  out << "Kitchen (X counter, O onions, D dishes, P pot, S serving window, "
         ". floor, 0/1 chefs):\n";
  for (int y = 0; y < layout.height; ++y) {
    std::string row = layout.rows[y];
    for (int a = 0; a < 2; ++a) {
      if (s.chef(a).pos.y == y) row[s.chef(a).pos.x] = static_cast<char>('0' + a);
    }
    out << row << "\n";
  }
  for (int a = 0; a < 2; ++a) {
    const auto& chef = s.chef(a);
    out << "Chef " << a << ": " << grid::PosString(chef.pos) << " facing "
        << grid::DirToken(chef.facing) << " holding " << overcooked::ItemName(chef.held);
    if (chef.held == overcooked::Item::kSoup) out << " (" << chef.soup_onions << " onions)";
    out << "\n";
  }
  for (const auto& pot : s.pots()) {
    out << "Pot " << grid::PosString(pot.pos) << ": " << PotString(pot, s.config()) << "\n";
  }
  out << "Soups delivered: " << s.deliveries() << "\n";
  return out.str();
}

std::string PongText(const pong::PongState& s, int agent) {
  const auto& c = s.config();
  std::ostringstream out;
  out << "Pong. You control the " << (agent == pong::kRight ? "right" : "left")
      << " paddle.\n";
  out << "Court: " << c.court_width << " wide, " << c.court_height
      << " tall; y grows downwards.\n";
  out << "Score: left " << s.score(0) << ", right " << s.score(1) << ".\n";
  for (int side = 0; side < 2; ++side) {
    out << (side == 0 ? "Left" : "Right") << " paddle: x " << (side == 0 ? c.left_paddle_x : c.right_paddle_x)
        << ", top " << s.paddle_y(side) << ", bottom " << s.paddle_y(side) + c.paddle_length
        << ".\n";
  }
  const auto& b = s.ball();
  out << "Ball: position (" << b.x << ", " << b.y << "), velocity (" << b.vx << ", " << b.vy
      << ").\n";
  return out.str();
}

}  // namespace

std::string RenderText(const State& state, int agent) {
  if (agent < 0 || agent > 1) throw Error(ErrorCode::kInvalidArgument, "agent out of range");
  if (auto* s = dynamic_cast<const hanabi::HanabiState*>(&state)) return HanabiText(*s, agent);
  if (auto* s = dynamic_cast<const breakthrough::BreakthroughState*>(&state)) {
    return BreakthroughText(*s, agent);
  }
  if (auto* s = dynamic_cast<const kuhn::KuhnState*>(&state)) return KuhnText(*s, agent);
  if (auto* s = dynamic_cast<const tictactoe::TicTacToeState*>(&state)) {
    return TicTacToeText(*s, agent);
  }
  if (auto* s = dynamic_cast<const grid::DilemmaState*>(&state)) return DilemmaText(*s, agent);
  if (auto* s = dynamic_cast<const overcooked::OvercookedState*>(&state)) {
    return OvercookedText(*s, agent);
  }
  if (auto* s = dynamic_cast<const pong::PongState*>(&state)) return PongText(*s, agent);
  throw Error(ErrorCode::kInvalidArgument, "no text renderer for this state");
}

}  // namespace vsarena::render
