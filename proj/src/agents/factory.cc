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

#include "vsarena/agents/factory.h"

#include <set>

#include "vsarena/agents/baselines.h"
#include "vsarena/agents/kuhn_ne.h"
#include "vsarena/core/error.h"
#include "vsarena/games/registry.h"

namespace vsarena::agents {
namespace {

class ParamReader {
 public:
  explicit ParamReader(const AgentSpec& spec) : spec_(spec) {}

  double Real(const std::string& key, double fallback) {
    used_.insert(key);
    auto it = spec_.params.find(key);
    if (it == spec_.params.end()) return fallback;
    try {
      size_t pos = 0;
      const double value = std::stod(it->second, &pos);
      if (pos != it->second.size()) throw std::invalid_argument("trailing");
      return value;
    } catch (const std::exception&) {
      // Fractions such as alpha=1/6 are accepted.
      const size_t slash = it->second.find('/');
      if (slash != std::string::npos) {
        try {
          return std::stod(it->second.substr(0, slash)) / std::stod(it->second.substr(slash + 1));
        } catch (const std::exception&) {
        }
      }
      throw Error(ErrorCode::kConfig, "agent '" + spec_.kind + "': " + key +
                                          " is not a number: " + it->second);
    }
  }

  int Int(const std::string& key, int fallback) {
    const double value = Real(key, fallback);
    if (value != static_cast<int>(value)) {
      throw Error(ErrorCode::kConfig, "agent '" + spec_.kind + "': " + key + " must be an integer");
    }
    return static_cast<int>(value);
  }

  std::string Str(const std::string& key, const std::string& fallback) {
    used_.insert(key);
    auto it = spec_.params.find(key);
    return it == spec_.params.end() ? fallback : it->second;
  }

  void Finish() const {
    for (const auto& [key, value] : spec_.params) {
      if (!used_.count(key)) {
        throw Error(ErrorCode::kConfig,
                    "agent '" + spec_.kind + "' has no parameter '" + key + "'");
      }
    }
  }

 private:
  const AgentSpec& spec_;
  std::set<std::string> used_;
};

void RequireEnv(const std::string& kind, const std::string& env,
                std::initializer_list<const char*> allowed) {
  for (const char* name : allowed) {
    if (env == name) return;
  }
  throw Error(ErrorCode::kConfig, "agent '" + kind + "' cannot play " + env);
}

std::unique_ptr<Policy> MakeBase(const AgentSpec& spec, const std::string& env,
                                 const RemoteConfig& remote, ParamReader& p) {
  const std::string& kind = spec.kind;
  if (kind == "random") return std::make_unique<RandomPolicy>();
  if (kind == "minimax") {
    RequireEnv(kind, env, {"breakthrough", "tic_tac_toe"});
    const int depth = p.Int("depth", 3);
    if (depth < 1) throw Error(ErrorCode::kConfig, "minimax depth must be at least 1");
    return std::make_unique<MinimaxPolicy>(depth);
  }
  if (kind == "mcts") {
    RequireEnv(kind, env, {"breakthrough", "tic_tac_toe"});
    MctsConfig config;
    config.uct_c = p.Real("c", config.uct_c);
    config.simulations = p.Int("sims", config.simulations);
    config.rollouts = p.Int("rollouts", config.rollouts);
    if (config.simulations < 1 || config.rollouts < 1) {
      throw Error(ErrorCode::kConfig, "mcts sims and rollouts must be positive");
    }
    return std::make_unique<MctsPolicy>(config);
  }
  if (kind == "kuhn-ne") {
    RequireEnv(kind, env, {"kuhn_poker"});
    const double alpha = p.Real("alpha", 0.0);
    try {
      return MakeKuhnEquilibriumPolicy(alpha);
    } catch (const Error& e) {
      throw Error(ErrorCode::kConfig, e.what());
    }
  }
  if (kind == "overcooked-script") {
    RequireEnv(kind, env, {"overcooked"});
    return std::make_unique<OvercookedScriptPolicy>();
  }
  if (kind == "hanabi-heuristic") {
    RequireEnv(kind, env, {"hanabi", "tiny_hanabi"});
    return std::make_unique<HanabiHeuristicPolicy>();
  }
  if (kind == "pong-bot") {
    RequireEnv(kind, env, {"pong"});
    return std::make_unique<PongBotPolicy>();
  }
  if (kind == "pong-tracker") {
    RequireEnv(kind, env, {"pong"});
    return std::make_unique<PongTrackerPolicy>(p.Int("aim", 0));
  }
  if (kind == "remote") {
    RemoteConfig config = remote;
    config.endpoint = p.Str("endpoint", config.endpoint);
    config.mode = ParseObservationMode(p.Str("mode", ObservationModeName(config.mode)));
    config.max_retries = p.Int("retries", config.max_retries);
    config.timeout_seconds = p.Real("timeout", config.timeout_seconds);
    config.frames = p.Int("frames", config.frames);
    auto client = std::make_shared<RemoteClient>(MakeTransport(config), config);
    return std::make_unique<RemotePolicy>(std::move(client));
  }
  for (const auto& name : GridScriptNames()) {
    if (kind == name) {
      RequireEnv(kind, env, {"coin_dilemma", "monster_hunt", "battle_of_colors"});
      return std::make_unique<GridScriptPolicy>(ParseGridScript(name));
    }
  }
  std::string known;
  for (const auto& k : AgentKinds()) known += (known.empty() ? "" : ", ") + k;
  throw Error(ErrorCode::kConfig, "unknown agent '" + kind + "' (known: " + known + ")");
}

std::string Trim(const std::string& s) {
  const size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

void AddParam(AgentSpec& spec, const std::string& piece) {
  const size_t eq = piece.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw Error(ErrorCode::kConfig, "agent parameter '" + piece + "' is not key=value");
  }
  spec.params[Trim(piece.substr(0, eq))] = Trim(piece.substr(eq + 1));
}

}  // namespace

std::string AgentSpec::ToString() const {
  std::string out = kind;
  char sep = ':';
  for (const auto& [key, value] : params) {
    out += sep + key + "=" + value;
    sep = ',';
  }
  return out;
}

AgentSpec ParseAgentSpec(const std::string& text) {
  auto list = ParseAgentList(text);
  if (list.size() != 1) {
    throw Error(ErrorCode::kConfig, "expected a single agent, got '" + text + "'");
  }
  return list[0];
}

std::vector<AgentSpec> ParseAgentList(const std::string& text) {
  std::vector<AgentSpec> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string piece = Trim(text.substr(start, comma - start));
    start = comma + 1;
    if (piece.empty()) throw Error(ErrorCode::kConfig, "empty entry in agent list '" + text + "'");
    const size_t colon = piece.find(':');
    if (colon == std::string::npos && piece.find('=') != std::string::npos) {
      if (out.empty()) throw Error(ErrorCode::kConfig, "parameter '" + piece + "' has no agent");
      AddParam(out.back(), piece);
      continue;
    }
    AgentSpec spec;
    spec.kind = Trim(piece.substr(0, colon));
    if (spec.kind.empty()) throw Error(ErrorCode::kConfig, "agent without a name in '" + text + "'");
    if (colon != std::string::npos) AddParam(spec, piece.substr(colon + 1));
    out.push_back(std::move(spec));
  }
  return out;
}

std::vector<std::string> AgentKinds() {
  std::vector<std::string> kinds = {"random",         "minimax",          "mcts",
                                    "kuhn-ne",        "overcooked-script", "hanabi-heuristic",
                                    "pong-bot",       "pong-tracker",     "remote",
                                    "oracle"};
  for (const auto& name : GridScriptNames()) kinds.push_back(name);
  return kinds;
}

std::string OracleSpec(const std::string& env) {
  const std::string name = CanonicalGameName(env);
  if (name == "coin_dilemma") return "own-color-coin";
  if (name == "monster_hunt") return "camp-center";
  if (name == "battle_of_colors") return "closest-common-block";
  if (name == "overcooked") return "overcooked-script";
  if (name == "breakthrough") return "minimax:depth=5";
  if (name == "tic_tac_toe") return "minimax:depth=9";
  if (name == "kuhn_poker") return "kuhn-ne:alpha=0";
  if (name == "pong") return "pong-tracker:aim=4";
  if (name == "hanabi" || name == "tiny_hanabi") return "hanabi-heuristic";
  throw Error(ErrorCode::kConfig, "no oracle agent for " + name);
}

std::unique_ptr<Policy> MakePolicy(const AgentSpec& spec, const std::string& env,
                                   const RemoteConfig& remote) {
  const std::string game = CanonicalGameName(env);
  if (spec.kind == "oracle" || spec.kind == "scripted-oracle") {
    AgentSpec resolved = ParseAgentSpec(OracleSpec(game));
    for (const auto& [key, value] : spec.params) resolved.params[key] = value;
    return MakePolicy(resolved, game, remote);
  }
  if (spec.kind == "ne") {
    AgentSpec resolved = spec;
    resolved.kind = "kuhn-ne";
    return MakePolicy(resolved, game, remote);
  }
  ParamReader reader(spec);
  const double eps = reader.Real("eps", 0.0);
  if (eps < 0.0 || eps > 1.0) throw Error(ErrorCode::kConfig, "eps must be in [0, 1]");
  auto policy = MakeBase(spec, game, remote, reader);
  reader.Finish();
  if (eps > 0.0) return std::make_unique<NoisyPolicy>(std::move(policy), eps);
  return policy;
}

}  // namespace vsarena::agents
