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

#include "vsarena/core/runner.h"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <sstream>

#include "vsarena/core/error.h"

namespace vsarena {

std::string Policy::PredictOther(const Environment&, int, Rng&) {
  throw Error(ErrorCode::kPolicy, name() + " does not predict other agents");
}

std::vector<std::vector<std::string>> Trajectory::ActionList() const {
  std::vector<std::vector<std::string>> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.actions);
  return out;
}

int Trajectory::CountEvents(const std::string& kind, int actor) const {
  int n = 0;
  for (const auto& s : steps) {
    for (const auto& e : s.events) {
      if (e.kind != kind) continue;
      if (actor >= 0 && std::find(e.actors.begin(), e.actors.end(), actor) == e.actors.end()) {
        continue;
      }
      ++n;
    }
  }
  return n;
}

namespace {

Trajectory Begin(const Environment& env, uint64_t seed,
                 std::vector<std::string> participants) {
  Trajectory t;
  t.seed = seed;
  t.spec = env.spec();
  t.params = env.game().params();
  t.participants = std::move(participants);
  t.returns.assign(env.spec().num_agents, 0.0);
  return t;
}

void Record(Trajectory& t, TrajectoryStep step, const StepResult& result) {
  step.rewards = result.rewards;
  step.events = result.events;
  for (size_t a = 0; a < result.rewards.size(); ++a) t.returns[a] += result.rewards[a];
  t.steps.push_back(std::move(step));
}

std::vector<std::string> TextObservations(const Environment& env) {
  std::vector<std::string> obs;
  for (int a = 0; a < env.spec().num_agents; ++a) obs.push_back(env.ObserveText(a));
  return obs;
}

}  // namespace

Trajectory RunEpisode(std::shared_ptr<const Game> game, uint64_t seed,
                      const std::vector<Policy*>& policies, const RunOptions& options) {
  Environment env(game);
  const int n = env.spec().num_agents;
  if (static_cast<int>(policies.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "run_episode needs one policy per agent");
  }
  std::vector<std::string> names;
  std::vector<Rng> rngs;
  const Rng base(seed, rng_stream::kPolicy);
  for (int a = 0; a < n; ++a) {
    if (policies[a] == nullptr) throw Error(ErrorCode::kInvalidArgument, "null policy");
    policies[a]->Reset(MixSeed(seed, a));
    names.push_back(policies[a]->name());
    rngs.push_back(base.Split(a));
  }
  env.Reset(seed);
  Trajectory t = Begin(env, seed, names);
  while (!env.IsTerminal()) {
    if (options.max_steps > 0 && env.step_index() >= options.max_steps) break;
    if (options.on_state) options.on_state(env);
    TrajectoryStep step;
    step.step = env.step_index();
    if (options.record_observations) step.observations = TextObservations(env);
    const int mover = env.CurrentAgent();
    for (int a = 0; a < n; ++a) {
      if (mover >= 0 && a != mover) {
        step.actions.push_back(kNoopToken);
        continue;
      }
      try {
        step.actions.push_back(policies[a]->Act(env, a, rngs[a]));
      } catch (const std::exception& e) {
        throw Error(ErrorCode::kPolicy, "policy " + names[a] + " failed at step " +
                                            std::to_string(step.step) + ": " + e.what());
      }
    }
    StepResult result = env.Step(step.actions);
    Record(t, std::move(step), result);
  }
  t.terminal = env.IsTerminal();
  t.final_state = env.state().Serialize();
  return t;
}

Trajectory Replay(std::shared_ptr<const Game> game, uint64_t seed,
                  const std::vector<std::vector<std::string>>& actions,
                  std::vector<std::string> participants, bool record_observations) {
  Environment env(game);
  env.Reset(seed);
  Trajectory t = Begin(env, seed, std::move(participants));
  for (const auto& joint : actions) {
    TrajectoryStep step;
    step.step = env.step_index();
    if (record_observations) step.observations = TextObservations(env);
    step.actions = joint;
    StepResult result = env.Step(joint);
    Record(t, std::move(step), result);
  }
  t.terminal = env.IsTerminal();
  t.final_state = env.state().Serialize();
  return t;
}

std::string IsoTimestampNow() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t secs = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&secs, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string ToJsonl(const Trajectory& t, const std::string& timestamp) {
  const std::string ts = timestamp.empty() ? IsoTimestampNow() : timestamp;
  std::ostringstream out;
  nlohmann::json header;
  header["record"] = "header";
  header["timestamp"] = ts;
  header["spec"] = ToJson(t.spec);
  header["params"] = t.params;
  header["seed"] = t.seed;
  header["participants"] = t.participants;
  out << header.dump() << "\n";
  for (const auto& s : t.steps) {
    nlohmann::json rec;
    rec["record"] = "step";
    rec["timestamp"] = ts;
    rec["step"] = s.step;
    rec["actions"] = s.actions;
    rec["rewards"] = s.rewards;
    std::vector<std::string> tags;
    for (const auto& e : s.events) tags.push_back(EventTag(e));
    rec["events"] = tags;
    if (!s.observations.empty()) rec["observations"] = s.observations;
    out << rec.dump() << "\n";
  }
  nlohmann::json footer;
  footer["record"] = "summary";
  footer["timestamp"] = ts;
  footer["returns"] = t.returns;
  footer["terminal"] = t.terminal;
  footer["steps"] = t.steps.size();
  out << footer.dump() << "\n";
  return out.str();
}

namespace {

GameEvent ParseEventTag(const std::string& tag) {
  GameEvent e;
  const size_t at = tag.find('@');
  e.kind = tag.substr(0, at);
  if (at == std::string::npos) return e;
  std::stringstream actors(tag.substr(at + 1));
  std::string item;
  while (std::getline(actors, item, '+')) e.actors.push_back(std::stoi(item));
  return e;
}

}  // namespace

Trajectory FromJsonl(const std::string& text) {
  Trajectory t;
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kIo, std::string("trajectory: bad JSONL line: ") + e.what());
    }
    const std::string kind = rec.value("record", "");
    if (kind == "header") {
      have_header = true;
      const auto& spec = rec.at("spec");
      t.spec.name = spec.at("name");
      t.spec.num_agents = spec.at("num_agents");
      t.spec.max_steps = spec.at("max_steps");
      t.spec.discount = spec.at("discount");
      t.spec.history_depth = spec.at("history_depth");
      t.spec.action_vocabulary = spec.at("action_vocabulary");
      const std::string cls = spec.at("interaction_class");
      for (auto c : {InteractionClass::kCooperative, InteractionClass::kCompetitive,
                     InteractionClass::kMixed}) {
        if (cls == InteractionClassName(c)) t.spec.interaction = c;
      }
      t.params = rec.value("params", nlohmann::json::object());
      t.seed = rec.at("seed");
      t.participants = rec.at("participants");
      t.returns.assign(t.spec.num_agents, 0.0);
    } else if (kind == "step") {
      TrajectoryStep s;
      s.step = rec.at("step");
      s.actions = rec.at("actions").get<std::vector<std::string>>();
      s.rewards = rec.at("rewards").get<std::vector<double>>();
      for (const auto& tag : rec.at("events")) s.events.push_back(ParseEventTag(tag));
      if (rec.contains("observations")) s.observations = rec["observations"];
      for (size_t a = 0; a < s.rewards.size() && a < t.returns.size(); ++a) {
        t.returns[a] += s.rewards[a];
      }
      t.steps.push_back(std::move(s));
    } else if (kind == "summary") {
      t.terminal = rec.value("terminal", false);
    }
  }
  if (!have_header) throw Error(ErrorCode::kIo, "trajectory: missing header record");
  return t;
}

}  // namespace vsarena
