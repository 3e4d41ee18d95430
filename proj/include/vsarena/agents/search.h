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

#ifndef VSARENA_AGENTS_SEARCH_H_
#define VSARENA_AGENTS_SEARCH_H_

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numeric>
#include <vector>

#include "vsarena/core/error.h"
#include "vsarena/core/rng.h"

namespace vsarena::agents {

// Terminal value from `agent`'s perspective. Wins found with more search
// depth remaining (i.e. sooner) score slightly higher, so a mate in one is
// always preferred over a slower forced win.
inline constexpr double kDepthPreference = 1e-3;

template <typename P>
double TerminalValue(const P& pos, int agent, int depth_left) {
  const int w = pos.Winner();
  if (w < 0) return 0.0;
  const double v = 1.0 + kDepthPreference * depth_left;
  return w == agent ? v : -v;
}

template <typename P>
struct SearchResult {
  typename P::Move move{};
  double value = 0.0;
  long nodes = 0;
};

// Plain depth-limited minimax (negamax form). Root ties go to the first
// move in canonical order. Kept as the reference for alpha-beta.
template <typename P>
double PlainMinimaxValue(const P& pos, int depth, long& nodes) {
  ++nodes;
  const int me = pos.ToMove();
  if (pos.Terminal()) return TerminalValue(pos, me, depth);
  if (depth == 0) return pos.Evaluate(me);
  std::vector<typename P::Move> moves;
  pos.Moves(moves);
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& m : moves) {
    P child = pos;
    child.Play(m);
    best = std::max(best, -PlainMinimaxValue(child, depth - 1, nodes));
  }
  return best;
}

template <typename P>
SearchResult<P> PlainMinimax(const P& pos, int depth) {
  if (depth < 1) throw Error(ErrorCode::kInvalidArgument, "minimax depth must be >= 1");
  SearchResult<P> result;
  std::vector<typename P::Move> moves;
  pos.Moves(moves);
  if (moves.empty()) throw Error(ErrorCode::kInvalidArgument, "minimax: no legal moves");
  result.value = -std::numeric_limits<double>::infinity();
  for (const auto& m : moves) {
    P child = pos;
    child.Play(m);
    const double v = -PlainMinimaxValue(child, depth - 1, result.nodes);
    if (v > result.value) {
      result.value = v;
      result.move = m;
    }
  }
  return result;
}

namespace internal {

template <typename P>
double AlphaBeta(const P& pos, int depth, double alpha, double beta, long& nodes) {
  ++nodes;
  const int me = pos.ToMove();
  if (pos.Terminal()) return TerminalValue(pos, me, depth);
  if (depth == 0) return pos.Evaluate(me);
  std::vector<typename P::Move> moves;
  pos.Moves(moves);
  std::vector<int> order(moves.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return pos.OrderingScore(moves[a]) > pos.OrderingScore(moves[b]);
  });
  double best = -std::numeric_limits<double>::infinity();
  for (int i : order) {
    P child = pos;
    child.Play(moves[i]);
    const double v = -AlphaBeta(child, depth - 1, -beta, -alpha, nodes);
    if (v > best) best = v;
    if (best > alpha) alpha = best;
    if (alpha >= beta) break;
  }
  return best;
}

}  // namespace internal

// Depth-limited alpha-beta. The root is searched in canonical move order
// and only a strictly better value replaces the incumbent, so the chosen
// move and value equal PlainMinimax's.
template <typename P>
SearchResult<P> AlphaBetaSearch(const P& pos, int depth) {
  if (depth < 1) throw Error(ErrorCode::kInvalidArgument, "minimax depth must be >= 1");
  SearchResult<P> result;
  std::vector<typename P::Move> moves;
  pos.Moves(moves);
  if (moves.empty()) throw Error(ErrorCode::kInvalidArgument, "minimax: no legal moves");
  double alpha = -std::numeric_limits<double>::infinity();
  const double beta = std::numeric_limits<double>::infinity();
  result.value = alpha;
  for (const auto& m : moves) {
    P child = pos;
    child.Play(m);
    const double v = -internal::AlphaBeta(child, depth - 1, -beta, -alpha, result.nodes);
    if (v > result.value) {
      result.value = v;
      result.move = m;
      alpha = v;
    }
  }
  return result;
}

struct MctsConfig {
  double uct_c = 2.0;
  int simulations = 100;
  int rollouts = 10;
};

// UCT with uniform-random rollouts; the final move is the most visited
// child (ties: higher mean value, then canonical order).
template <typename P>
class Mcts {
 public:
  using Move = typename P::Move;

  explicit Mcts(MctsConfig config) : config_(config) {
    if (config_.simulations < 1 || config_.rollouts < 1) {
      throw Error(ErrorCode::kInvalidArgument, "mcts needs simulations and rollouts >= 1");
    }
  }

  Move Search(const P& root_pos, Rng& rng) {
    nodes_.clear();
    nodes_.push_back(Node{});
    std::vector<Move> root_moves;
    root_pos.Moves(root_moves);
    if (root_moves.empty()) throw Error(ErrorCode::kInvalidArgument, "mcts: no legal moves");
    if (root_moves.size() == 1) return root_moves[0];
    for (int sim = 0; sim < config_.simulations; ++sim) Simulate(root_pos, rng);
    const Node& root = nodes_[0];
    int best = -1;
    for (size_t i = 0; i < root.children.size(); ++i) {
      const Node& c = nodes_[root.children[i]];
      if (best < 0) {
        best = static_cast<int>(i);
        continue;
      }
      const Node& b = nodes_[root.children[best]];
      if (c.visits > b.visits || (c.visits == b.visits && c.Mean() > b.Mean())) {
        best = static_cast<int>(i);
      }
    }
    return nodes_[root.children[best]].move;
  }

 private:
  struct Node {
    Move move{};
    int visits = 0;
    // Sum of values from the perspective of the agent who made `move`.
    double total = 0.0;
    bool expanded = false;
    std::vector<int> children;
    double Mean() const { return visits ? total / visits : 0.0; }
  };

  double Rollouts(const P& pos, int perspective, Rng& rng) {
    double sum = 0.0;
    std::vector<Move> moves;
    for (int r = 0; r < config_.rollouts; ++r) {
      P sim = pos;
      while (!sim.Terminal()) {
        sim.Moves(moves);
        sim.Play(moves[rng.Uniform(moves.size())]);
      }
      const int w = sim.Winner();
      sum += w < 0 ? 0.0 : (w == perspective ? 1.0 : -1.0);
    }
    return sum / config_.rollouts;
  }

  void Simulate(const P& root_pos, Rng& rng) {
    P pos = root_pos;
    std::vector<int> path = {0};
    std::vector<int> movers = {-1};
    int node = 0;
    std::vector<Move> moves;
    while (!pos.Terminal()) {
      if (!nodes_[node].expanded) {
        pos.Moves(moves);
        for (const Move& m : moves) {
          Node child;
          child.move = m;
          nodes_.push_back(child);
          nodes_[node].children.push_back(static_cast<int>(nodes_.size()) - 1);
        }
        nodes_[node].expanded = true;
      }
      const Node& parent = nodes_[node];
      // Unvisited children first, chosen at random.
      std::vector<int> unvisited;
      for (int c : parent.children) {
        if (nodes_[c].visits == 0) unvisited.push_back(c);
      }
      int next;
      bool fresh = false;
      if (!unvisited.empty()) {
        next = unvisited[rng.Uniform(unvisited.size())];
        fresh = true;
      } else {
        const double log_n = std::log(static_cast<double>(parent.visits));
        double best = -std::numeric_limits<double>::infinity();
        next = parent.children[0];
        for (int c : parent.children) {
          const Node& ch = nodes_[c];
          const double score = ch.Mean() + config_.uct_c * std::sqrt(log_n / ch.visits);
          if (score > best) {
            best = score;
            next = c;
          }
        }
      }
      movers.push_back(pos.ToMove());
      pos.Play(nodes_[next].move);
      path.push_back(next);
      node = next;
      if (fresh) break;
    }
    // Value for agent 0; converted per node below.
    double value0;
    if (pos.Terminal()) {
      const int w = pos.Winner();
      value0 = w < 0 ? 0.0 : (w == 0 ? 1.0 : -1.0);
    } else {
      value0 = Rollouts(pos, 0, rng);
    }
    for (size_t i = 0; i < path.size(); ++i) {
      Node& n = nodes_[path[i]];
      ++n.visits;
      if (movers[i] >= 0) n.total += movers[i] == 0 ? value0 : -value0;
    }
  }

  MctsConfig config_;
  std::vector<Node> nodes_;
};

}  // namespace vsarena::agents

#endif  // VSARENA_AGENTS_SEARCH_H_
