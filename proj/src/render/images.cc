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

#include <algorithm>
#include <string>

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
namespace {

using namespace palette;

constexpr int kMargin = 16;

Color HanabiColor(char letter) {
  switch (letter) {
    case 'R': return kRed;
    case 'Y': return kYellow;
    case 'G': return kGreen;
    case 'W': return kLightGray;
    case 'B': return kBlue;
  }
  return kGray;
}

void Title(Canvas& c, const std::string& text) {
  c.Text(kMargin, 10, text, kBlack, 2);
}

// ---------------------------------------------------------------- Hanabi

void DrawHanabiCard(Canvas& c, int x, int y, const std::string& face, Color fill,
                    const std::string& knowledge) {
  c.FillRect(x, y, 56, 72, fill);
  c.StrokeRect(x, y, 56, 72, kBlack, 2);
  c.Text(x + 28 - Canvas::TextWidth(face, 2) / 2, y + 22, face, kBlack, 2);
  c.Text(x, y + 76, knowledge, kDarkGray);
}

Canvas HanabiImage(const hanabi::HanabiState& s, int agent) {
  const auto& config = s.config();
  Canvas c(kFrameSize, kFrameSize, kCream);
  Title(c, "Hanabi - player " + std::to_string(agent));

  // Panel 1: basic information.
  int y = 44;
  c.StrokeRect(8, y - 4, 496, 48, kGray);
  c.Text(kMargin, y, "Info " + std::to_string(s.info_tokens()) + "/" +
                         std::to_string(config.max_info_tokens) + "  Life " +
                         std::to_string(s.life_tokens()) + "/" +
                         std::to_string(config.max_life_tokens) + "  Deck " +
                         std::to_string(s.deck().size()),
         kBlack);
  std::string turn = s.IsTerminal() ? "Game over" : "Player " + std::to_string(s.CurrentAgent()) + " to act";
  if (s.final_round_counter() >= 0) {
    turn += "  final round: " + std::to_string(s.final_round_counter()) + " left";
  }
  c.Text(kMargin, y + 16, turn, kBlack);
  std::string discards = "Discards:";
  for (const auto& card : s.discard_pile()) discards += " " + CardString(card, config);
  c.Text(kMargin, y + 30, discards.substr(0, 68), kDarkGray);

  // Panel 2: recent actions.
  y = 100;
  c.StrokeRect(8, y - 4, 496, 36, kGray);
  for (int p = 0; p < 2; ++p) {
    std::string line = "P" + std::to_string(p) + ":";
    for (const auto& a : s.recent_actions(p)) line += " " + a;
    c.Text(kMargin, y + p * 14, line, kBlack);
  }

  // Panel 3: fireworks.
  y = 144;
  c.StrokeRect(8, y - 4, 496, 84, kGray);
  c.Text(kMargin, y, "Fireworks", kBlack);
  for (int col = 0; col < config.num_colors(); ++col) {
    const int x = kMargin + col * 64;
    const std::string face =
        std::string(1, config.color_letters[col]) + std::to_string(s.fireworks()[col]);
    c.FillRect(x, y + 16, 48, 56, HanabiColor(config.color_letters[col]));
    c.StrokeRect(x, y + 16, 48, 56, kBlack, 2);
    c.Text(x + 24 - Canvas::TextWidth(face, 2) / 2, y + 32, face, kBlack, 2);
  }

  // Panel 4: hands. The viewer's own faces stay hidden.
  for (int row = 0; row < 2; ++row) {
    const int owner = row == 0 ? 1 - agent : agent;
    y = 236 + row * 136;
    c.StrokeRect(8, y - 4, 496, 132, kGray);
    c.Text(kMargin, y, row == 0 ? "Partner hand (player " + std::to_string(owner) + ")"
                                : "Your hand (player " + std::to_string(owner) + ")",
           kBlack);
    for (size_t i = 0; i < s.hand(owner).size(); ++i) {
      const int x = kMargin + static_cast<int>(i) * 96;
      const auto& k = s.knowledge(owner)[i];
      std::string kn = KnowledgeString(k, config);
      kn = kn.substr(8, kn.size() - 9);  // drop "[colors " and "]"
      if (owner == agent) {
        DrawHanabiCard(c, x, y + 16, "?", kWhite, kn);
      } else {
        const auto& card = s.hand(owner)[i];
        DrawHanabiCard(c, x, y + 16, CardString(card, config),
                       HanabiColor(config.color_letters[card.color]), kn);
      }
    }
  }
  return c;
}

// ----------------------------------------------------------- Breakthrough

Canvas BreakthroughImage(const breakthrough::BreakthroughState& s, int agent) {
  using namespace breakthrough;
  Canvas c(kFrameSize, kFrameSize, kCream);
  const Board& b = s.board();
  std::string status = b.Terminal() ? std::string(ColorName(b.winner)) + " wins"
                                    : std::string(ColorName(b.to_move)) + " to move";
  Title(c, std::string("Breakthrough - you play ") + ColorName(ColorForAgent(agent)) +
               " - " + status);
  const int cell = 52, ox = 44, oy = 44;
  for (int row = 0; row < kSize; ++row) {
    for (int col = 0; col < kSize; ++col) {
      const int x = ox + col * cell;
      const int y = oy + (kSize - 1 - row) * cell;
      c.FillRect(x, y, cell, cell, (row + col) % 2 ? kWood : kBrown);
      const int p = b.cells[Square(col, row)];
      if (p != kEmpty) {
        c.FillCircle(x + cell / 2, y + cell / 2, cell / 2 - 6, palette::kBlack);
        c.FillCircle(x + cell / 2, y + cell / 2, cell / 2 - 8,
                     p == breakthrough::kWhite ? palette::kWhite : palette::kDarkGray);
      }
    }
  }
  for (int i = 0; i < kSize; ++i) {
    const std::string col(1, static_cast<char>('a' + i));
    const std::string row = std::to_string(kSize - i);
    c.Text(ox + i * cell + cell / 2 - 7, oy + kSize * cell + 6, col, kBlack, 2);
    c.Text(ox - 24, oy + i * cell + cell / 2 - 11, row, kBlack, 2);
  }
  c.StrokeRect(ox, oy, kSize * cell, kSize * cell, kBlack, 2);
  return c;
}

// -------------------------------------------------------------- Kuhn

Canvas KuhnImage(const kuhn::KuhnState& s, int agent) {
  Canvas c(kFrameSize, kFrameSize, kGreen);
  Title(c, "Kuhn Poker - player " + std::to_string(agent));
  // Private card.
  const int cx = 176, cy = 80;
  c.FillRect(cx, cy, 160, 224, kWhite);
  c.StrokeRect(cx, cy, 160, 224, kBlack, 3);
  const std::string face(1, kuhn::CardLetter(s.card(agent)));
  c.Text(cx + 12, cy + 10, face, kRed, 3);
  c.Text(cx + 80 - Canvas::TextWidth(face, 8) / 2, cy + 70, face, kRed, 8);
  c.Text(cx + 12, cy + 320 - 110, "Your card", kDarkGray);
  // Pot as stacked chips.
  const int py = 340;
  c.Text(kMargin, py, "Pot: " + std::to_string(s.pot()) + " chips", kWhite, 2);
  for (int i = 0; i < s.pot(); ++i) {
    c.FillCircle(300 + i * 36, py + 12, 14, kYellow);
    c.FillCircle(300 + i * 36, py + 12, 9, kOrange);
  }
  c.Text(kMargin, py + 40, "You " + std::to_string(s.contribution(agent)) + ", opponent " +
                               std::to_string(s.contribution(1 - agent)),
         kWhite, 2);
  std::string history = "History:";
  if (s.history().empty()) history += " (empty)";
  for (size_t i = 0; i < s.history().size(); ++i) {
    history += std::string(" P") + std::to_string(i % 2) +
               (s.history()[i] == 'B' ? " BET" : " PASS");
  }
  c.Text(kMargin, py + 80, history, kWhite, 2);
  std::string status = s.IsTerminal() ? "Hand over"
                                       : "Player " + std::to_string(s.CurrentAgent()) + " to act";
  c.Text(kMargin, py + 120, status, kWhite, 2);
  return c;
}

// -------------------------------------------------------------- Tic-tac-toe

Canvas TicTacToeImage(const tictactoe::TicTacToeState& s, int agent) {
  Canvas c(kFrameSize, kFrameSize, kWhite);
  Title(c, std::string("Tic-Tac-Toe - you play ") + (agent == 0 ? "X" : "O"));
  const int cell = 128, ox = 64, oy = 64;
  for (int i = 1; i < 3; ++i) {
    c.FillRect(ox + i * cell - 2, oy, 4, 3 * cell, kBlack);
    c.FillRect(ox, oy + i * cell - 2, 3 * cell, 4, kBlack);
  }
  for (int i = 0; i < 9; ++i) {
    const int x = ox + (i % 3) * cell, y = oy + (i / 3) * cell;
    c.Text(x + 6, y + 6, std::to_string(i), kGray);
    if (s.cell(i) == 1) {
      for (int d = -3; d <= 3; ++d) {
        c.Line(x + 24 + d, y + 24, x + cell - 24 + d, y + cell - 24, kBlue);
        c.Line(x + cell - 24 + d, y + 24, x + 24 + d, y + cell - 24, kBlue);
      }
    } else if (s.cell(i) == 2) {
      c.FillCircle(x + cell / 2, y + cell / 2, 40, kRed);
      c.FillCircle(x + cell / 2, y + cell / 2, 33, kWhite);
    }
  }
  return c;
}

// ------------------------------------------------------------- Dilemmas

Canvas DilemmaImage(const grid::DilemmaState& s, int agent) {
  const auto& config = s.config();
  Canvas c(kFrameSize, kFrameSize, kWhite);
  std::string title;
  switch (s.kind()) {
    case grid::DilemmaKind::kCoinDilemma: title = "Coin Dilemma"; break;
    case grid::DilemmaKind::kMonsterHunt: title = "Monster Hunt"; break;
    case grid::DilemmaKind::kBattleOfColors: title = "Battle of the Colors"; break;
  }
  Title(c, title + " - you are " + grid::AgentColorName(agent));
  c.Text(kMargin, 34, "Step " + std::to_string(s.step_index()) + " of " +
                          std::to_string(config.horizon),
         kDarkGray);
  const int cell = std::min(304 / config.width, 240 / config.height);
  const int ox = kMargin, oy = 52;
  for (int y = 0; y < config.height; ++y) {
    for (int x = 0; x < config.width; ++x) {
      c.FillRect(ox + x * cell, oy + y * cell, cell, cell, kLightGray);
      c.StrokeRect(ox + x * cell, oy + y * cell, cell, cell, kGray);
    }
  }
  auto center = [&](grid::Pos p, int& cx, int& cy) {
    cx = ox + p.x * cell + cell / 2;
    cy = oy + p.y * cell + cell / 2;
  };
  int cx, cy;
  const int r = cell / 2 - 6;
  switch (s.kind()) {
    case grid::DilemmaKind::kCoinDilemma:
      for (int i = 0; i < 2; ++i) {
        center(s.items()[i], cx, cy);
        c.FillCircle(cx, cy, r / 2 + 2, kYellow);
        c.FillCircle(cx, cy, r / 2, i == 0 ? kRed : kBlue);
      }
      break;
    case grid::DilemmaKind::kMonsterHunt:
      for (int i = 0; i < 2; ++i) {
        center(s.items()[i], cx, cy);
        c.FillCircle(cx, cy + 2, r / 2, kGreen);
        c.FillRect(cx - 1, cy - r / 2 - 4, 3, 6, kBrown);
      }
      center(s.monster(), cx, cy);
      c.Ghost(cx, cy, r, kPurple);
      break;
    case grid::DilemmaKind::kBattleOfColors:
      for (int i = 0; i < 2; ++i) {
        center(s.items()[i], cx, cy);
        c.FillRect(cx - r + 4, cy - r + 4, 2 * r - 8, 2 * r - 8, i == 0 ? kRed : kBlue);
        c.StrokeRect(cx - r + 4, cy - r + 4, 2 * r - 8, 2 * r - 8, kBlack, 2);
      }
      break;
  }
  // Players last so they stay visible; a shared cell shows both halves.
  const bool shared = s.player(0) == s.player(1);
  for (int a = 0; a < 2; ++a) {
    center(s.player(a), cx, cy);
    const int off = shared ? (a == 0 ? -r / 3 : r / 3) : 0;
    c.PacMan(cx + off, cy, shared ? r * 2 / 3 : r - 2, 1, 0, a == 0 ? kRed : kBlue);
  }

  // Legend and event table.
  int ty = oy + config.height * cell + 12;
  c.Text(kMargin, ty, "Red/blue Pac-Man: players", kBlack);
  switch (s.kind()) {
    case grid::DilemmaKind::kCoinDilemma:
      c.Text(kMargin + 256, ty, "Discs: coins", kBlack);
      break;
    case grid::DilemmaKind::kMonsterHunt:
      c.Text(kMargin + 256, ty, "Green: apples, ghost: monster", kBlack);
      break;
    case grid::DilemmaKind::kBattleOfColors:
      c.Text(kMargin + 256, ty, "Squares: blocks", kBlack);
      break;
  }
  ty += 20;
  c.Text(kMargin, ty, "Event", kBlack);
  c.Text(kMargin + 300, ty, "Count", kBlack);
  c.Text(kMargin + 360, ty, "Red  Blue", kBlack);
  c.FillRect(kMargin, ty + 13, 480, 1, kBlack);
  ty += 18;
  for (const auto& [key, row] : config.rewards) {
    c.Text(kMargin, ty, grid::RowDescription(key), kDarkGray);
    c.Text(kMargin + 300, ty, std::to_string(s.counters().at(key)), kBlack);
    c.Text(kMargin + 360, ty, SignedNumber(row[0]), kRed);
    c.Text(kMargin + 395, ty, SignedNumber(row[1]), kBlue);
    ty += 15;
  }
  // Side panel: coordinates.
  int sx = ox + config.width * cell + 16, sy = 60;
  auto line = [&](const std::string& text) {
    c.Text(sx, sy, text, kBlack);
    sy += 16;
  };
  line("Red " + grid::PosString(s.player(0)));
  line("Blue " + grid::PosString(s.player(1)));
  if (s.kind() == grid::DilemmaKind::kMonsterHunt) {
    line("Apple " + grid::PosString(s.items()[0]));
    line("Apple " + grid::PosString(s.items()[1]));
    line("Monster " + grid::PosString(s.monster()));
  } else {
    const std::string what = s.kind() == grid::DilemmaKind::kCoinDilemma ? "coin" : "block";
    line("Red " + what + " " + grid::PosString(s.items()[0]));
    line("Blue " + what + " " + grid::PosString(s.items()[1]));
  }
  return c;
}

// ------------------------------------------------------------ Overcooked

Canvas OvercookedImage(const overcooked::OvercookedState& s, int agent) {
  using overcooked::Item;
  const auto& layout = s.layout();
  Canvas c(kFrameSize, kFrameSize, kCream);
  Title(c, "Overcooked - you are chef " + std::to_string(agent));
  c.Text(kMargin, 34, "Step " + std::to_string(s.step_index()) + " of " +
                          std::to_string(s.config().horizon) + "   Delivered " +
                          std::to_string(s.deliveries()),
         kDarkGray);
  const int cell = std::min(480 / layout.width, 288 / layout.height);
  const int ox = kMargin, oy = 52;
  for (int y = 0; y < layout.height; ++y) {
    for (int x = 0; x < layout.width; ++x) {
      const int px = ox + x * cell, py = oy + y * cell;
      const char t = layout.rows[y][x];
      Color fill = t == '.' ? kWhite : kWood;
      c.FillRect(px, py, cell, cell, fill);
      c.StrokeRect(px, py, cell, cell, kGray);
      const int mx = px + cell / 2, my = py + cell / 2;
      if (t == 'O') {
        c.FillCircle(mx - 10, my, 10, kOrange);
        c.FillCircle(mx + 10, my, 10, kOrange);
      } else if (t == 'D') {
        c.FillCircle(mx, my, cell / 3, kWhite);
        c.FillCircle(mx, my, cell / 3 - 4, kLightGray);
      } else if (t == 'S') {
        c.FillRect(px + 6, py + 6, cell - 12, cell - 12, kGray);
        c.Text(mx - 7, my - 11, "S", kWhite, 2);
      } else if (t == 'P') {
        c.FillRect(px + 8, py + 12, cell - 16, cell - 20, kDarkGray);
      }
    }
  }
  for (const auto& pot : s.pots()) {
    const int px = ox + pot.pos.x * cell, py = oy + pot.pos.y * cell;
    for (int i = 0; i < pot.onions; ++i) c.FillCircle(px + 20 + i * 18, py + cell / 2, 7, kOrange);
    std::string label = pot.cooked ? "ready"
                        : pot.cooking ? std::to_string(pot.timer) + "/" +
                                            std::to_string(s.config().cook_time)
                                      : "";
    if (!label.empty()) c.Text(px + 6, py + 2, label, pot.cooked ? kGreen : kRed);
  }
  for (int a = 0; a < 2; ++a) {
    const auto& chef = s.chef(a);
    const int mx = ox + chef.pos.x * cell + cell / 2, my = oy + chef.pos.y * cell + cell / 2;
    const grid::Pos d = grid::Offset({0, 0}, chef.facing);
    c.PacMan(mx, my, cell / 2 - 8, d.x, d.y, a == 0 ? kBlue : kGreen);
    c.Text(mx - 3, my - 24, std::to_string(a), kBlack);
    if (chef.held == Item::kOnion) c.FillCircle(mx + d.x * 18, my + d.y * 18, 7, kOrange);
    if (chef.held == Item::kDish) c.FillCircle(mx + d.x * 18, my + d.y * 18, 8, kLightGray);
    if (chef.held == Item::kSoup) {
      c.FillCircle(mx + d.x * 18, my + d.y * 18, 9, kLightGray);
      c.FillCircle(mx + d.x * 18, my + d.y * 18, 6, kOrange);
    }
  }
  int ty = oy + layout.height * cell + 12;
  auto line = [&](const std::string& text) {
    c.Text(kMargin, ty, text, kBlack);
    ty += 15;
  };
  line("Legend: brown counter, two orange = onions, plate = dishes,");
  line("dark = pot, S = serving window, Pac-Man = chef (mouth faces ahead)");
  for (int a = 0; a < 2; ++a) {
    const auto& chef = s.chef(a);
    line("Chef " + std::to_string(a) + " " + grid::PosString(chef.pos) + " facing " +
         grid::DirToken(chef.facing) + " holding " + overcooked::ItemName(chef.held));
  }
  for (const auto& pot : s.pots()) {
    std::string state = std::to_string(pot.onions) + " onions, " +
                        (pot.cooked    ? std::string("soup ready")
                         : pot.cooking ? "cooking " + std::to_string(pot.timer) + "/" +
                                             std::to_string(s.config().cook_time)
                                       : std::string("idle"));
    line("Pot " + grid::PosString(pot.pos) + ": " + state);
  }
  return c;
}

// ------------------------------------------------------------------ Pong

Canvas PongImage(const pong::PongState& s, int) {
  const auto& cfg = s.config();
  constexpr int kScale = 2;
  Canvas c(cfg.court_width * kScale, cfg.court_height * kScale, kBlack);
  const Color paddle_colors[2] = {kOrange, kGreen};
  const int xs[2] = {cfg.left_paddle_x, cfg.right_paddle_x};
  for (int side = 0; side < 2; ++side) {
    c.FillRect(xs[side] * kScale, s.paddle_y(side) * kScale, cfg.paddle_width * kScale,
               cfg.paddle_length * kScale, paddle_colors[side]);
  }
  const auto& b = s.ball();
  c.FillRect(b.x * kScale, b.y * kScale, cfg.ball_size * kScale, cfg.ball_size * kScale, kWhite);
  // Scores at the top, left score over the left half.
  const std::string left = std::to_string(s.score(0));
  const std::string right = std::to_string(s.score(1));
  c.Text(c.width() / 4 - Canvas::TextWidth(left, 3) / 2, 6, left, paddle_colors[0], 3);
  c.Text(3 * c.width() / 4 - Canvas::TextWidth(right, 3) / 2, 6, right, paddle_colors[1], 3);
  return c;
}

}  // namespace

Canvas RenderImage(const State& state, int agent) {
  if (agent < 0 || agent > 1) throw Error(ErrorCode::kInvalidArgument, "agent out of range");
  if (auto* s = dynamic_cast<const hanabi::HanabiState*>(&state)) return HanabiImage(*s, agent);
  if (auto* s = dynamic_cast<const breakthrough::BreakthroughState*>(&state)) {
    return BreakthroughImage(*s, agent);
  }
  if (auto* s = dynamic_cast<const kuhn::KuhnState*>(&state)) return KuhnImage(*s, agent);
  if (auto* s = dynamic_cast<const tictactoe::TicTacToeState*>(&state)) {
    return TicTacToeImage(*s, agent);
  }
  if (auto* s = dynamic_cast<const grid::DilemmaState*>(&state)) return DilemmaImage(*s, agent);
  if (auto* s = dynamic_cast<const overcooked::OvercookedState*>(&state)) {
    return OvercookedImage(*s, agent);
  }
  if (auto* s = dynamic_cast<const pong::PongState*>(&state)) return PongImage(*s, agent);
  throw Error(ErrorCode::kInvalidArgument, "no image renderer for this state");
}

std::string RenderPng(const State& state, int agent) {
  return EncodePng(RenderImage(state, agent));
}

}  // namespace vsarena::render
