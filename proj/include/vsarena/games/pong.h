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

#ifndef VSARENA_GAMES_PONG_H_
#define VSARENA_GAMES_PONG_H_

#include <array>
#include <string>
#include <vector>

#include "vsarena/core/game.h"
#include "vsarena/core/rng.h"

namespace vsarena::pong {

inline constexpr char kUp[] = "<UP>";
inline constexpr char kDown[] = "<DOWN>";
inline constexpr char kStay[] = "<STAY>";

// Agent 0 is the left paddle (the built-in bot's seat), agent 1 the right.
inline constexpr int kLeft = 0;
inline constexpr int kRight = 1;

enum class PaddleAction { kStay, kUp, kDown };

const std::vector<std::string>& ActionTokens();
PaddleAction ParseAction(const std::string& token);
const char* ActionToken(PaddleAction action);

// Integer court units; y grows downwards, (0, 0) is the top-left corner.
struct PongConfig {
  int court_width = 160;
  int court_height = 192;
  int paddle_length = 16;
  int paddle_width = 4;
  int paddle_speed = 4;
  // Left edge of the left paddle and of the right paddle.
  int left_paddle_x = 8;
  int right_paddle_x = 148;
  int ball_size = 2;
  int ball_speed_x = 2;
  int max_ball_speed_y = 3;
  double sticky_prob = 0.25;
  int min_noops = 1;
  int max_noops = 30;
  int frame_stack = 4;
  int winning_score = 3;
  // Safety cap on agent ticks; the score rule ends nearly every episode
  // long before this.
  int max_steps = 2000;
};

struct Ball {
  int x = 0;  // top-left corner
  int y = 0;
  int vx = 0;
  int vy = 0;
  bool operator==(const Ball&) const = default;
};

class PongState : public State {
 public:
  PongState(const PongConfig& config, uint64_t seed);

  std::unique_ptr<State> Clone() const override;
  bool IsTerminal() const override;
  int CurrentAgent() const override {
    return IsTerminal() ? kTerminalAgent : kSimultaneousAgents;
  }
  std::vector<std::string> LegalActions(int agent) const override;
  Transition Apply(const std::vector<std::string>& joint) override;
  std::string Serialize() const override;

  const PongConfig& config() const { return config_; }
  // Top edge of each paddle.
  int paddle_y(int side) const { return paddle_y_[side]; }
  const Ball& ball() const { return ball_; }
  int score(int side) const { return scores_[side]; }
  PaddleAction prev_action(int side) const { return prev_action_[side]; }
  int noop_ticks() const { return noop_ticks_; }
  // The action each paddle actually executed on the last tick.
  PaddleAction effective_action(int side) const { return prev_action_[side]; }

  // Vertical speed given to the ball by a paddle hit: five bands over the
  // paddle face, steepest at the edges.
  int BounceSpeed(int ball_center, int paddle_top, int incoming_vy) const;

  // Test hooks.
  void SetBall(const Ball& ball) { ball_ = ball; }
  void SetPaddle(int side, int y) { paddle_y_[side] = y; }

 private:
  // One physics tick with already-resolved paddle actions. Returns the
  // scoring side or -1.
  int Tick(PaddleAction left, PaddleAction right);
  void Serve(int toward);

  PongConfig config_;
  std::array<int, 2> paddle_y_{};
  Ball ball_;
  std::array<int, 2> scores_{0, 0};
  std::array<PaddleAction, 2> prev_action_{PaddleAction::kStay, PaddleAction::kStay};
  Rng sticky_;
  Rng serve_;
  int noop_ticks_ = 0;
};

class PongGame : public Game {
 public:
  explicit PongGame(PongConfig config = {});
  const GameSpec& spec() const override { return spec_; }
  std::unique_ptr<State> NewInitialState(uint64_t seed) const override;
  nlohmann::json params() const override;
  const PongConfig& config() const { return config_; }

 private:
  PongConfig config_;
  GameSpec spec_;
};

}  // namespace vsarena::pong

#endif  // VSARENA_GAMES_PONG_H_
