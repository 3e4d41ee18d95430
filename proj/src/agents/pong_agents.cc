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

#include <cstdlib>

#include "vsarena/agents/baselines.h"
#include "vsarena/core/error.h"
#include "vsarena/games/pong.h"

namespace vsarena::agents {
namespace {

using pong::PongState;

const PongState& AsPong(const Environment& env) {
  const auto* s = dynamic_cast<const PongState*>(&env.state());
  if (s == nullptr) throw Error(ErrorCode::kPolicy, "pong agent used outside Pong");
  return *s;
}

// Horizontal distance the bot watches; beyond it the ball is ignored.
constexpr int kBotReaction = 90;

std::string Toward(int paddle_center, int target, int deadzone) {
  if (target < paddle_center - deadzone) return pong::kUp;
  if (target > paddle_center + deadzone) return pong::kDown;
  return pong::kStay;
}

// Ball centre row when it reaches the paddle face of `side`, following
// wall reflections; nullopt-equivalent -1 if it is moving away.
int InterceptRow(const PongState& s, int side) {
  const auto& c = s.config();
  pong::Ball b = s.ball();
  const bool toward = side == pong::kLeft ? b.vx < 0 : b.vx > 0;
  if (!toward) return -1;
  const int max_y = c.court_height - c.ball_size;
  const int face_left = c.left_paddle_x + c.paddle_width;
  const int face_right = c.right_paddle_x;
  for (int t = 0; t < 4 * c.court_width; ++t) {
    if (side == pong::kLeft && b.x <= face_left) break;
    if (side == pong::kRight && b.x + c.ball_size >= face_right) break;
    b.x += b.vx;
    b.y += b.vy;
    if (b.y < 0) {
      b.y = -b.y;
      b.vy = -b.vy;
    } else if (b.y > max_y) {
      b.y = 2 * max_y - b.y;
      b.vy = -b.vy;
    }
  }
  return b.y + c.ball_size / 2;
}

}  // namespace

std::string PongBotPolicy::Act(const Environment& env, int agent, Rng&) {
  const PongState& s = AsPong(env);
  const auto& c = s.config();
  // Half speed: the bot only moves on even ticks.
  if (s.step_index() % 2 == 1) return pong::kStay;
  const int center = s.paddle_y(agent) + c.paddle_length / 2;
  const auto& b = s.ball();
  const int face = agent == pong::kLeft ? c.left_paddle_x + c.paddle_width : c.right_paddle_x;
  const bool approaching = agent == pong::kLeft ? b.vx < 0 : b.vx > 0;
  if (approaching && std::abs(b.x - face) <= kBotReaction) {
    return Toward(center, b.y + c.ball_size / 2, 2);
  }
  return Toward(center, c.court_height / 2, 4);
}

std::string PongTrackerPolicy::Act(const Environment& env, int agent, Rng&) {
  const PongState& s = AsPong(env);
  const auto& c = s.config();
  const int center = s.paddle_y(agent) + c.paddle_length / 2;
  const int row = InterceptRow(s, agent);
  if (row < 0) return Toward(center, c.court_height / 2, 2);
  // Hit off-centre to send the ball away from the opponent's paddle.
  int offset = 0;
  if (aim_ != 0) {
    const int opp_center = s.paddle_y(1 - agent) + c.paddle_length / 2;
    offset = opp_center < c.court_height / 2 ? aim_ : -aim_;
  }
  return Toward(center, row - offset, 2);
}

std::string PongTrackerPolicy::name() const {
  return aim_ == 0 ? "pong-tracker" : "pong-tracker(aim=" + std::to_string(aim_) + ")";
}

}  // namespace vsarena::agents
