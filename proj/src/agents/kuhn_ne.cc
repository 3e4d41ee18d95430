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

#include "vsarena/agents/kuhn_ne.h"

#include <algorithm>
#include <sstream>

#include "vsarena/core/error.h"
#include "vsarena/games/kuhn_poker.h"

namespace vsarena::agents {

KuhnStrategy KuhnEquilibrium(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0 / 3.0 + 1e-15)) {
    throw Error(ErrorCode::kInvalidArgument, "kuhn equilibrium alpha must lie in [0, 1/3]");
  }
  alpha = std::min(alpha, 1.0 / 3.0);
  KuhnStrategy s;
  s.open_bet = {alpha, 0.0, std::min(1.0, 3.0 * alpha)};
  s.call_after_bet = {0.0, alpha + 1.0 / 3.0, 1.0};
  s.bet_after_pass = {1.0 / 3.0, 0.0, 1.0};
  s.call_bet = {0.0, 1.0 / 3.0, 1.0};
  return s;
}

double BetProbability(const KuhnStrategy& s, int seat, int card, const std::string& history) {
  if (seat == 0 && history.empty()) return s.open_bet[card];
  if (seat == 0 && history == "PB") return s.call_after_bet[card];
  if (seat == 1 && history == "P") return s.bet_after_pass[card];
  if (seat == 1 && history == "B") return s.call_bet[card];
  throw Error(ErrorCode::kInvalidArgument, "kuhn: no decision for seat " +
                                               std::to_string(seat) + " at '" + history + "'");
}

namespace {

// Net chips for seat 0 at a terminal history.
double Payoff(int c0, int c1, const std::string& h) {
  const double showdown = c0 > c1 ? 1.0 : -1.0;
  if (h == "PP") return showdown;
  if (h == "BP") return 1.0;
  if (h == "PBP") return -1.0;
  if (h == "BB" || h == "PBB") return 2.0 * showdown;
  throw Error(ErrorCode::kInternal, "kuhn: not terminal: " + h);
}

double Value(int c0, int c1, const std::string& h, const KuhnStrategy& s0,
             const KuhnStrategy& s1) {
  if (h == "PP" || h == "BP" || h == "PBP" || h == "BB" || h == "PBB") {
    return Payoff(c0, c1, h);
  }
  const int seat = h.size() % 2;
  const int card = seat == 0 ? c0 : c1;
  const double bet = BetProbability(seat == 0 ? s0 : s1, seat, card, h);
  double v = 0.0;
  if (bet > 0.0) v += bet * Value(c0, c1, h + "B", s0, s1);
  if (bet < 1.0) v += (1.0 - bet) * Value(c0, c1, h + "P", s0, s1);
  return v;
}

}  // namespace

double KuhnExpectedValue(const KuhnStrategy& seat0, const KuhnStrategy& seat1) {
  double total = 0.0;
  for (int c0 = 0; c0 < 3; ++c0) {
    for (int c1 = 0; c1 < 3; ++c1) {
      if (c0 != c1) total += Value(c0, c1, "", seat0, seat1);
    }
  }
  return total / 6.0;
}

std::vector<KuhnStrategy> KuhnPureStrategies(int seat) {
  std::vector<KuhnStrategy> out;
  for (int bits = 0; bits < 64; ++bits) {
    KuhnStrategy s;
    for (int card = 0; card < 3; ++card) {
      const double first = (bits >> card) & 1;
      const double second = (bits >> (card + 3)) & 1;
      if (seat == 0) {
        s.open_bet[card] = first;
        s.call_after_bet[card] = second;
      } else {
        s.bet_after_pass[card] = first;
        s.call_bet[card] = second;
      }
    }
    out.push_back(s);
  }
  return out;
}

double KuhnBestResponseValue(int seat, const KuhnStrategy& opponent) {
  double best = -1e300;
  for (const auto& pure : KuhnPureStrategies(seat)) {
    const double v = seat == 0 ? KuhnExpectedValue(pure, opponent)
                               : -KuhnExpectedValue(opponent, pure);
    best = std::max(best, v);
  }
  return best;
}

double KuhnBestResponseGain(int seat, const KuhnStrategy& own, const KuhnStrategy& opponent) {
  const double current =
      seat == 0 ? KuhnExpectedValue(own, opponent) : -KuhnExpectedValue(opponent, own);
  return KuhnBestResponseValue(seat, opponent) - current;
}

KuhnPolicy::KuhnPolicy(KuhnStrategy strategy, std::string name)
    : strategy_(strategy), name_(std::move(name)) {}

std::string KuhnPolicy::Act(const Environment& env, int agent, Rng& rng) {
  const auto* s = dynamic_cast<const kuhn::KuhnState*>(&env.state());
  if (s == nullptr) throw Error(ErrorCode::kPolicy, "kuhn policy used outside Kuhn poker");
  const double p = BetProbability(strategy_, agent, s->card(agent), s->history());
  return rng.Bernoulli(p) ? kuhn::kBet : kuhn::kPass;
}

std::unique_ptr<Policy> MakeKuhnEquilibriumPolicy(double alpha) {
  std::ostringstream name;
  name << "kuhn-ne(alpha=" << alpha << ")";
  return std::make_unique<KuhnPolicy>(KuhnEquilibrium(alpha), name.str());
}

}  // namespace vsarena::agents
