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

#include "vsarena/games/hanabi.h"

#include <algorithm>
#include <map>

#include "vsarena/core/error.h"
#include "vsarena/core/rng.h"

namespace vsarena::hanabi {

int HanabiConfig::deck_size() const {
  int per_color = 0;
  for (int c : rank_counts) per_color += c;
  return per_color * num_colors();
}

HanabiConfig HanabiConfig::Full() { return HanabiConfig{}; }

HanabiConfig HanabiConfig::Tiny() {
  HanabiConfig c;
  c.color_letters = "RY";
  c.num_ranks = 3;
  c.rank_counts = {3, 2, 1};
  c.hand_size = 3;
  return c;
}

std::string MoveToToken(const HanabiMove& move, const HanabiConfig& config) {
  switch (move.type) {
    case MoveType::kPlay:
      return "<PLAY " + std::to_string(move.value) + ">";
    case MoveType::kDiscard:
      return "<DISCARD " + std::to_string(move.value) + ">";
    case MoveType::kRevealColor:
      return std::string("<REVEAL color ") + config.color_letters.at(move.value) + ">";
    case MoveType::kRevealRank:
      return "<REVEAL rank " + std::to_string(move.value) + ">";
  }
  return "";
}

std::optional<HanabiMove> ParseToken(const std::string& token,
                                     const HanabiConfig& config) {
  if (token.size() < 3 || token.front() != '<' || token.back() != '>') {
    return std::nullopt;
  }
  const std::string body = token.substr(1, token.size() - 2);
  auto parse_int = [](const std::string& s) -> std::optional<int> {
    if (s.empty() || s.size() > 2) return std::nullopt;
    for (char ch : s) {
      if (ch < '0' || ch > '9') return std::nullopt;
    }
    return std::stoi(s);
  };
  if (body.rfind("PLAY ", 0) == 0) {
    if (auto v = parse_int(body.substr(5))) return HanabiMove{MoveType::kPlay, *v};
  } else if (body.rfind("DISCARD ", 0) == 0) {
    if (auto v = parse_int(body.substr(8))) return HanabiMove{MoveType::kDiscard, *v};
  } else if (body.rfind("REVEAL color ", 0) == 0) {
    const std::string c = body.substr(13);
    if (c.size() == 1) {
      auto pos = config.color_letters.find(c[0]);
      if (pos != std::string::npos) {
        return HanabiMove{MoveType::kRevealColor, static_cast<int>(pos)};
      }
    }
  } else if (body.rfind("REVEAL rank ", 0) == 0) {
    if (auto v = parse_int(body.substr(12))) {
      return HanabiMove{MoveType::kRevealRank, *v};
    }
  }
  return std::nullopt;
}

std::vector<Card> FullDeck(const HanabiConfig& config) {
  std::vector<Card> deck;
  for (int c = 0; c < config.num_colors(); ++c) {
    for (int r = 1; r <= config.num_ranks; ++r) {
      for (int k = 0; k < config.rank_counts.at(r - 1); ++k) deck.push_back({c, r});
    }
  }
  return deck;
}

HanabiState::HanabiState(const HanabiConfig& config, std::vector<Card> deck)
    : config_(config),
      deck_(std::move(deck)),
      fireworks_(config.num_colors(), 0),
      info_tokens_(config.max_info_tokens),
      life_tokens_(config.max_life_tokens) {
  if (static_cast<int>(deck_.size()) < 2 * config_.hand_size) {
    throw Error(ErrorCode::kInvalidArgument, "hanabi: deck too small to deal");
  }
  for (int k = 0; k < config_.hand_size; ++k) {
    for (int agent = 0; agent < 2; ++agent) Draw(agent);
  }
}

std::unique_ptr<State> HanabiState::Clone() const {
  return std::make_unique<HanabiState>(*this);
}

int HanabiState::CurrentAgent() const {
  return terminal_ ? kTerminalAgent : current_;
}

void HanabiState::Draw(int agent) {
  if (deck_.empty()) return;
  hands_[agent].push_back(deck_.back());
  deck_.pop_back();
  CardKnowledge k;
  k.colors = (1u << config_.num_colors()) - 1;
  k.ranks = (1u << config_.num_ranks) - 1;
  knowledge_[agent].push_back(k);
}

int HanabiState::FireworkSum() const {
  int s = 0;
  for (int f : fireworks_) s += f;
  return s;
}

std::vector<HanabiMove> HanabiState::LegalMoves() const {
  std::vector<HanabiMove> moves;
  if (terminal_) return moves;
  const auto& own = hands_[current_];
  for (int i = 0; i < static_cast<int>(own.size()); ++i) {
    moves.push_back({MoveType::kPlay, i});
  }
  for (int i = 0; i < static_cast<int>(own.size()); ++i) {
    moves.push_back({MoveType::kDiscard, i});
  }
  if (info_tokens_ > 0) {
    const auto& other = hands_[1 - current_];
    for (int c = 0; c < config_.num_colors(); ++c) {
      bool present = std::any_of(other.begin(), other.end(),
                                 [c](const Card& card) { return card.color == c; });
      if (present) moves.push_back({MoveType::kRevealColor, c});
    }
    for (int r = 1; r <= config_.num_ranks; ++r) {
      bool present = std::any_of(other.begin(), other.end(),
                                 [r](const Card& card) { return card.rank == r; });
      if (present) moves.push_back({MoveType::kRevealRank, r});
    }
  }
  return moves;
}

std::vector<std::string> HanabiState::LegalActions(int agent) const {
  if (terminal_) return {};
  if (agent != current_) return {kNoopToken};
  std::vector<std::string> legal;
  for (const auto& m : LegalMoves()) legal.push_back(MoveToToken(m, config_));
  return legal;
}

void HanabiState::RecordAction(int agent, const std::string& text) {
  auto& recent = recent_actions_[agent];
  recent.push_back(text);
  while (recent.size() > 2) recent.pop_front();
}

Transition HanabiState::Apply(const std::vector<std::string>& joint) {
  const int mover = current_;
  auto move = ParseToken(joint.at(mover), config_);
  if (!move) throw Error(ErrorCode::kIllegalAction, "hanabi: unparseable action");

  Transition t;
  t.rewards = {0.0, 0.0};
  const bool deck_was_empty = deck_.empty();
  auto card_name = [this](const Card& c) {
    return std::string(1, config_.color_letters[c.color]) + std::to_string(c.rank);
  };

  switch (move->type) {
    case MoveType::kPlay: {
      auto& hand = hands_[mover];
      if (move->value < 0 || move->value >= static_cast<int>(hand.size())) {
        throw Error(ErrorCode::kIllegalAction, "hanabi: slot out of range");
      }
      const Card card = hand[move->value];
      hand.erase(hand.begin() + move->value);
      knowledge_[mover].erase(knowledge_[mover].begin() + move->value);
      if (fireworks_[card.color] + 1 == card.rank) {
        fireworks_[card.color] = card.rank;
        t.rewards = {1.0, 1.0};
        t.events.push_back({"play-success", {mover}});
        RecordAction(mover, joint[mover] + " " + card_name(card) + " success");
      } else {
        --life_tokens_;
        discards_.push_back(card);
        t.events.push_back({"misplay", {mover}});
        RecordAction(mover, joint[mover] + " " + card_name(card) + " misplay");
      }
      Draw(mover);
      break;
    }
    case MoveType::kDiscard: {
      auto& hand = hands_[mover];
      if (move->value < 0 || move->value >= static_cast<int>(hand.size())) {
        throw Error(ErrorCode::kIllegalAction, "hanabi: slot out of range");
      }
      const Card card = hand[move->value];
      hand.erase(hand.begin() + move->value);
      knowledge_[mover].erase(knowledge_[mover].begin() + move->value);
      discards_.push_back(card);
      info_tokens_ = std::min(info_tokens_ + 1, config_.max_info_tokens);
      t.events.push_back({"discard", {mover}});
      RecordAction(mover, joint[mover] + " " + card_name(card));
      Draw(mover);
      break;
    }
    case MoveType::kRevealColor:
    case MoveType::kRevealRank: {
      if (info_tokens_ <= 0) {
        throw Error(ErrorCode::kIllegalAction, "hanabi: no info tokens");
      }
      const int target = 1 - mover;
      bool matched = false;
      for (size_t i = 0; i < hands_[target].size(); ++i) {
        const Card& card = hands_[target][i];
        auto& k = knowledge_[target][i];
        if (move->type == MoveType::kRevealColor) {
          const uint32_t bit = 1u << move->value;
          if (card.color == move->value) {
            k.colors &= bit;
            matched = true;
          } else {
            k.colors &= ~bit;
          }
        } else {
          const uint32_t bit = 1u << (move->value - 1);
          if (card.rank == move->value) {
            k.ranks &= bit;
            matched = true;
          } else {
            k.ranks &= ~bit;
          }
        }
      }
      if (!matched) throw Error(ErrorCode::kIllegalAction, "hanabi: empty hint");
      --info_tokens_;
      t.events.push_back({"reveal", {mover}});
      RecordAction(mover, joint[mover]);
      break;
    }
  }

  ++step_index_;
  if (life_tokens_ <= 0) {
    terminal_ = true;
    t.events.push_back({"lives-exhausted", {}});
  } else if (FireworkSum() == config_.max_score()) {
    terminal_ = true;
    t.events.push_back({"fireworks-complete", {}});
  } else if (final_round_counter_ > 0) {
    if (--final_round_counter_ == 0) {
      terminal_ = true;
      t.events.push_back({"final-round-complete", {}});
    }
  } else if (!deck_was_empty && deck_.empty()) {
    // Each player gets exactly one more turn.
    final_round_counter_ = 2;
  }
  current_ = 1 - mover;
  return t;
}

bool HanabiState::CardsConserved() const {
  std::map<std::pair<int, int>, int> counts;
  auto add = [&](const Card& c) { ++counts[{c.color, c.rank}]; };
  for (const auto& c : deck_) add(c);
  for (const auto& h : hands_) {
    for (const auto& c : h) add(c);
  }
  for (const auto& c : discards_) add(c);
  for (int color = 0; color < config_.num_colors(); ++color) {
    for (int r = 1; r <= fireworks_[color]; ++r) add({color, r});
  }
  std::map<std::pair<int, int>, int> expected;
  for (const auto& c : FullDeck(config_)) ++expected[{c.color, c.rank}];
  return counts == expected;
}

std::string HanabiState::Serialize() const {
  auto cards = [this](const std::vector<Card>& v) {
    std::string s;
    for (const auto& c : v) {
      s += config_.color_letters[c.color];
      s += std::to_string(c.rank);
    }
    return s;
  };
  std::string s = "hanabi deck=" + cards(deck_);
  for (int a = 0; a < 2; ++a) {
    s += " hand" + std::to_string(a) + "=" + cards(hands_[a]) + " know=";
    for (const auto& k : knowledge_[a]) {
      s += std::to_string(k.colors) + ":" + std::to_string(k.ranks) + ",";
    }
  }
  s += " fw=";
  for (int f : fireworks_) s += std::to_string(f);
  s += " disc=" + cards(discards_);
  s += " info=" + std::to_string(info_tokens_);
  s += " life=" + std::to_string(life_tokens_);
  s += " cur=" + std::to_string(current_);
  s += " final=" + std::to_string(final_round_counter_);
  s += terminal_ ? " T" : " N";
  return s;
}

HanabiGame::HanabiGame(HanabiConfig config, std::string name)
    : config_(std::move(config)) {
  spec_.name = std::move(name);
  spec_.interaction = InteractionClass::kCooperative;
  spec_.history_depth = 1;
  std::vector<std::string> vocab;
  for (int i = 0; i < config_.hand_size; ++i) {
    vocab.push_back(MoveToToken({MoveType::kPlay, i}, config_));
  }
  for (int i = 0; i < config_.hand_size; ++i) {
    vocab.push_back(MoveToToken({MoveType::kDiscard, i}, config_));
  }
  for (int c = 0; c < config_.num_colors(); ++c) {
    vocab.push_back(MoveToToken({MoveType::kRevealColor, c}, config_));
  }
  for (int r = 1; r <= config_.num_ranks; ++r) {
    vocab.push_back(MoveToToken({MoveType::kRevealRank, r}, config_));
  }
  vocab.push_back(kNoopToken);
  spec_.action_vocabulary = {vocab, vocab};
}

std::unique_ptr<State> HanabiGame::NewInitialState(uint64_t seed) const {
  Rng deal(seed, rng_stream::kDeal);
  auto deck = FullDeck(config_);
  deal.Shuffle(deck);
  return std::make_unique<HanabiState>(config_, std::move(deck));
}

HanabiReturns ComputeReturns(const HanabiState& state) {
  if (!state.IsTerminal()) {
    throw Error(ErrorCode::kInvalidArgument, "hanabi returns need a terminal state");
  }
  HanabiReturns r;
  r.firework = state.FireworkSum();
  r.standard = state.LivesExhausted() ? 0.0 : r.firework;
  return r;
}

}  // namespace vsarena::hanabi
