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

#include "vsarena/games/pong.h"

#include <algorithm>

#include "vsarena/core/error.h"

namespace vsarena::pong {

const std::vector<std::string>& ActionTokens() {
  static const std::vector<std::string> kTokens = {kUp, kDown, kStay};
  return kTokens;
}

PaddleAction ParseAction(const std::string& token) {
  if (token == kUp) return PaddleAction::kUp;
  if (token == kDown) return PaddleAction::kDown;
  if (token == kStay) return PaddleAction::kStay;
  throw Error(ErrorCode::kIllegalAction, "pong: unknown action " + token);
}

const char* ActionToken(PaddleAction action) {
  switch (action) {
    case PaddleAction::kUp: return kUp;
    case PaddleAction::kDown: return kDown;
    case PaddleAction::kStay: return kStay;
  }
  return kStay;
}

PongState::PongState(const PongConfig& config, uint64_t seed)
    : config_(config),
      sticky_(seed, rng_stream::kSticky),
      serve_(seed, rng_stream::kServe) {
  if (config_.sticky_prob < 0.0 || config_.sticky_prob > 1.0) {
    throw Error(ErrorCode::kConfig, "pong: sticky_prob must lie in [0, 1]");
  }
  const int center = (config_.court_height - config_.paddle_length) / 2;
  paddle_y_ = {center, center};
  // The opening serve goes to the bot's side so the no-op prefix never
  // decides a point on its own.
  Serve(kLeft);
  Rng noop(seed, rng_stream::kNoop);
  noop_ticks_ = static_cast<int>(noop.UniformInt(config_.min_noops, config_.max_noops));
  for (int i = 0; i < noop_ticks_; ++i) {
    const int scorer = Tick(PaddleAction::kStay, PaddleAction::kStay);
    if (scorer >= 0) {
      ++scores_[scorer];
      Serve(1 - scorer);
    }
  }
}

std::unique_ptr<State> PongState::Clone() const {
  return std::make_unique<PongState>(*this);
}

bool PongState::IsTerminal() const {
  return scores_[0] >= config_.winning_score || scores_[1] >= config_.winning_score ||
         (config_.max_steps > 0 && step_index_ >= config_.max_steps);
}

std::vector<std::string> PongState::LegalActions(int) const {
  if (IsTerminal()) return {};
  return ActionTokens();
}

void PongState::Serve(int toward) {
  ball_.x = (config_.court_width - config_.ball_size) / 2;
  ball_.y = (config_.court_height - config_.ball_size) / 2;
  ball_.vx = toward == kLeft ? -config_.ball_speed_x : config_.ball_speed_x;
  static constexpr int kServeSpeeds[] = {-2, -1, 1, 2};
  ball_.vy = kServeSpeeds[serve_.Uniform(4)];
}

int PongState::BounceSpeed(int ball_center, int paddle_top, int incoming_vy) const {
  const int offset = std::clamp(ball_center - paddle_top, 0, config_.paddle_length - 1);
  const int band = offset * 5 / config_.paddle_length;
  const int steep = config_.max_ball_speed_y;
  switch (band) {
    case 0: return -steep;
    case 1: return -(steep + 1) / 2;
    case 3: return (steep + 1) / 2;
    case 4: return steep;
    default: return incoming_vy < 0 ? -1 : 1;
  }
}

int PongState::Tick(PaddleAction left, PaddleAction right) {
  const std::array<PaddleAction, 2> act = {left, right};
  const int max_y = config_.court_height - config_.paddle_length;
  for (int side = 0; side < 2; ++side) {
    int dy = 0;
    if (act[side] == PaddleAction::kUp) dy = -config_.paddle_speed;
    if (act[side] == PaddleAction::kDown) dy = config_.paddle_speed;
    paddle_y_[side] = std::clamp(paddle_y_[side] + dy, 0, max_y);
  }

  const int size = config_.ball_size;
  const int old_x = ball_.x;
  ball_.x += ball_.vx;
  ball_.y += ball_.vy;
  const int max_ball_y = config_.court_height - size;
  if (ball_.y < 0) {
    ball_.y = -ball_.y;
    ball_.vy = -ball_.vy;
  } else if (ball_.y > max_ball_y) {
    ball_.y = 2 * max_ball_y - ball_.y;
    ball_.vy = -ball_.vy;
  }

  auto overlaps = [&](int side) {
    const int top = paddle_y_[side];
    return ball_.y + size > top && ball_.y < top + config_.paddle_length;
  };
  const int center = ball_.y + size / 2;
  const int left_face = config_.left_paddle_x + config_.paddle_width;
  const int right_face = config_.right_paddle_x;
  if (ball_.vx < 0 && old_x >= left_face && ball_.x < left_face && overlaps(kLeft)) {
    ball_.x = 2 * left_face - ball_.x;
    ball_.vx = -ball_.vx;
    ball_.vy = BounceSpeed(center, paddle_y_[kLeft], ball_.vy);
  } else if (ball_.vx > 0 && old_x + size <= right_face &&
             ball_.x + size > right_face && overlaps(kRight)) {
    ball_.x = 2 * (right_face - size) - ball_.x;
    ball_.vx = -ball_.vx;
    ball_.vy = BounceSpeed(center, paddle_y_[kRight], ball_.vy);
  }

  if (ball_.x + size <= 0) return kRight;
  if (ball_.x >= config_.court_width) return kLeft;
  return -1;
}

Transition PongState::Apply(const std::vector<std::string>& joint) {
  Transition t;
  t.rewards = {0.0, 0.0};
  std::array<PaddleAction, 2> effective;
  for (int side = 0; side < 2; ++side) {
    const PaddleAction submitted = ParseAction(joint.at(side));
    // Both draws happen every tick so the sticky stream stays aligned
    // regardless of what the agents submit.
    const bool stick = sticky_.Bernoulli(config_.sticky_prob);
    effective[side] = stick ? prev_action_[side] : submitted;
  }
  prev_action_ = effective;
  const int scorer = Tick(effective[kLeft], effective[kRight]);
  if (scorer >= 0) {
    ++scores_[scorer];
    t.rewards[scorer] = 1.0;
    t.rewards[1 - scorer] = -1.0;
    t.events.push_back({"point", {scorer}});
    if (scores_[scorer] < config_.winning_score) Serve(1 - scorer);
  }
  ++step_index_;
  return t;
}

std::string PongState::Serialize() const {
  std::string s = "pong t=" + std::to_string(step_index_);
  s += " paddles=" + std::to_string(paddle_y_[0]) + "," + std::to_string(paddle_y_[1]);
  s += " ball=" + std::to_string(ball_.x) + "," + std::to_string(ball_.y) + "," +
       std::to_string(ball_.vx) + "," + std::to_string(ball_.vy);
  s += " score=" + std::to_string(scores_[0]) + "-" + std::to_string(scores_[1]);
  s += " prev=" + std::string(ActionToken(prev_action_[0])) + ActionToken(prev_action_[1]);
  s += " noops=" + std::to_string(noop_ticks_);
  return s;
}

PongGame::PongGame(PongConfig config) : config_(std::move(config)) {
  if (config_.frame_stack < 1) {
    throw Error(ErrorCode::kConfig, "pong: frame_stack must be at least 1");
  }
  spec_.name = "pong";
  spec_.interaction = InteractionClass::kCompetitive;
  spec_.max_steps = config_.max_steps;
  spec_.history_depth = config_.frame_stack;
  spec_.action_vocabulary = {ActionTokens(), ActionTokens()};
}

std::unique_ptr<State> PongGame::NewInitialState(uint64_t seed) const {
  return std::make_unique<PongState>(config_, seed);
}

nlohmann::json PongGame::params() const {
  return {{"sticky_prob", config_.sticky_prob},
          {"frame_stack", config_.frame_stack},
          {"max_steps", config_.max_steps},
          {"min_noops", config_.min_noops},
          {"max_noops", config_.max_noops}};
}

}  // namespace vsarena::pong
