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

#include "vsarena/agents/baselines.h"
#include "vsarena/core/error.h"
#include "vsarena/games/hanabi.h"

namespace vsarena::agents {
namespace {

using hanabi::CardKnowledge;
using hanabi::HanabiMove;
using hanabi::HanabiState;
using hanabi::MoveType;

bool Playable(const HanabiState& s, int color, int rank) {
  return s.fireworks()[color] + 1 == rank;
}

// True when every card consistent with the knowledge satisfies `pred`.
template <typename Pred>
bool AllPossible(const HanabiState& s, const CardKnowledge& k, Pred pred) {
  for (int c = 0; c < s.config().num_colors(); ++c) {
    if (!(k.colors & (1u << c))) continue;
    for (int r = 1; r <= s.config().num_ranks; ++r) {
      if (!(k.ranks & (1u << (r - 1)))) continue;
      if (!pred(c, r)) return false;
    }
  }
  return true;
}

int Bits(uint32_t x) { return __builtin_popcount(x); }

}  // namespace

std::string HanabiHeuristicPolicy::Act(const Environment& env, int agent, Rng& rng) {
  const auto* s = dynamic_cast<const HanabiState*>(&env.state());
  if (s == nullptr) throw Error(ErrorCode::kPolicy, "hanabi heuristic used outside Hanabi");
  const auto& config = s->config();
  const auto legal = env.LegalActions(agent);
  auto token = [&](MoveType type, int value) {
    return hanabi::MoveToToken(HanabiMove{type, value}, config);
  };
  auto is_legal = [&](const std::string& t) {
    return std::find(legal.begin(), legal.end(), t) != legal.end();
  };

  // 1. Play a card that must be playable.
  const auto& mine = s->knowledge(agent);
  for (size_t i = 0; i < mine.size(); ++i) {
    if (AllPossible(*s, mine[i], [&](int c, int r) { return Playable(*s, c, r); })) {
      return token(MoveType::kPlay, static_cast<int>(i));
    }
  }

  // 2. Hint a playable partner card the partner does not yet know about.
  const int partner = 1 - agent;
  if (s->info_tokens() > 0) {
    const auto& hand = s->hand(partner);
    const auto& know = s->knowledge(partner);
    for (size_t i = 0; i < hand.size(); ++i) {
      if (!Playable(*s, hand[i].color, hand[i].rank)) continue;
      if (AllPossible(*s, know[i], [&](int c, int r) { return Playable(*s, c, r); })) continue;
      std::string hint;
      if (Bits(know[i].colors) == 1 && Bits(know[i].ranks) > 1) {
        hint = token(MoveType::kRevealRank, hand[i].rank);
      } else if (Bits(know[i].ranks) == 1) {
        hint = token(MoveType::kRevealColor, hand[i].color);
      } else {
        hint = token(MoveType::kRevealRank, hand[i].rank);
      }
      if (is_legal(hint)) return hint;
    }
  }

  // 3. Discard: a card known to be useless, else the oldest unhinted card.
  if (s->info_tokens() < config.max_info_tokens) {
    for (size_t i = 0; i < mine.size(); ++i) {
      if (AllPossible(*s, mine[i], [&](int c, int r) { return r <= s->fireworks()[c]; })) {
        return token(MoveType::kDiscard, static_cast<int>(i));
      }
    }
    const uint32_t all_colors = (1u << config.num_colors()) - 1;
    const uint32_t all_ranks = (1u << config.num_ranks) - 1;
    for (size_t i = 0; i < mine.size(); ++i) {
      if (mine[i].colors == all_colors && mine[i].ranks == all_ranks) {
        return token(MoveType::kDiscard, static_cast<int>(i));
      }
    }
    return token(MoveType::kDiscard, 0);
  }

  // 4. Tokens are full: give any legal hint.
  std::vector<std::string> hints;
  for (const auto& t : legal) {
    if (t.rfind("<REVEAL", 0) == 0) hints.push_back(t);
  }
  if (!hints.empty()) return hints[rng.Uniform(hints.size())];
  return token(MoveType::kDiscard, 0);
}

}  // namespace vsarena::agents
