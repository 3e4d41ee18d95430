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

#include "vsarena/vsarena.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include <spdlog/spdlog.h>

#include "json.hpp"
#include "vsarena/agents/factory.h"
#include "vsarena/agents/remote.h"
#include "vsarena/core/environment.h"
#include "vsarena/core/error.h"
#include "vsarena/core/policy.h"
#include "vsarena/core/rng.h"
#include "vsarena/core/runner.h"
#include "vsarena/dataset/dataset.h"
#include "vsarena/eval/eval.h"
#include "vsarena/games/registry.h"
#include "vsarena/render/render.h"
#include "vsarena/verify/verify.h"

struct vsarena_env {
  explicit vsarena_env(std::shared_ptr<const vsarena::Game> game) : env(std::move(game)) {}
  vsarena::Environment env;
  bool reset = false;
};

struct vsarena_policy {
  std::unique_ptr<vsarena::Policy> policy;
  vsarena::Rng rng;
};

namespace {

using nlohmann::json;
using vsarena::Error;
using vsarena::ErrorCode;

thread_local std::string last_error;

vsarena_status StatusOf(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return VSARENA_ERR_INVALID_ARGUMENT;
    case ErrorCode::kUnknownEnvironment: return VSARENA_ERR_UNKNOWN_ENVIRONMENT;
    case ErrorCode::kIllegalAction: return VSARENA_ERR_ILLEGAL_ACTION;
    case ErrorCode::kTerminalState: return VSARENA_ERR_TERMINAL_STATE;
    case ErrorCode::kConfig: return VSARENA_ERR_CONFIG;
    case ErrorCode::kIo: return VSARENA_ERR_IO;
    case ErrorCode::kRemote: return VSARENA_ERR_REMOTE;
    case ErrorCode::kPolicy: return VSARENA_ERR_POLICY;
    case ErrorCode::kVerify: return VSARENA_ERR_VERIFY;
    case ErrorCode::kInternal: return VSARENA_ERR_INTERNAL;
  }
  return VSARENA_ERR_INTERNAL;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
vsarena_status Guard(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return VSARENA_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return StatusOf(e.code());
  } catch (const json::exception& e) {
    last_error = std::string("malformed JSON: ") + e.what();
    return VSARENA_ERR_CONFIG;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return VSARENA_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return VSARENA_ERR_INTERNAL;
  }
}

void Require(const void* p, const char* what) {
  if (p == nullptr) throw Error(ErrorCode::kInvalidArgument, std::string(what) + " is null");
}

char* Copy(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

void Emit(char** out, const std::string& s) {
  if (out != nullptr) *out = Copy(s);
}

json ParseRequest(const char* text) {
  if (text == nullptr || *text == '\0') return json::object();
  json j = json::parse(text);
  if (!j.is_object()) throw Error(ErrorCode::kConfig, "request must be a JSON object");
  return j;
}

std::string RequireString(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) {
    throw Error(ErrorCode::kConfig, std::string("request: '") + key + "' must be a string");
  }
  return j[key].get<std::string>();
}

vsarena::agents::RemoteConfig RemoteFromJson(const json& j) {
  auto config = vsarena::agents::RemoteConfigFromEnv();
  if (j.is_null()) return config;
  if (!j.is_object()) throw Error(ErrorCode::kConfig, "remote: must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "endpoint") {
      config.endpoint = value.get<std::string>();
    } else if (key == "api_key") {
      config.api_key = value.get<std::string>();
    } else if (key == "timeout") {
      config.timeout_seconds = value.get<double>();
    } else if (key == "retries") {
      config.max_retries = value.get<int>();
    } else if (key == "mode") {
      config.mode = vsarena::agents::ParseObservationMode(value.get<std::string>());
    } else if (key == "frames") {
      config.frames = value.get<int>();
    } else {
      throw Error(ErrorCode::kConfig, "remote." + key + ": unknown key");
    }
  }
  return config;
}

std::string SeatLabel(const std::string& env, int seat) {
  if (env == "breakthrough") return seat == 0 ? "Black" : "White";
  if (env == "pong") return seat == 0 ? "Left" : "Right";
  if (env == "coin_dilemma" || env == "monster_hunt" || env == "battle_of_colors") {
    return seat == 0 ? "Red" : "Blue";
  }
  if (env == "tic_tac_toe") return seat == 0 ? "X" : "O";
  return "Seat " + std::to_string(seat);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::map<int, std::string> ParsePredictions(const std::string& text, const std::string& path) {
  std::map<int, std::string> out;
  auto add = [&](const json& record, int line) {
    const char* keys[] = {"prediction", "action", "answer"};
    for (const char* key : keys) {
      if (record.contains(key)) {
        out[record.at("id").get<int>()] = record[key].get<std::string>();
        return;
      }
    }
    throw Error(ErrorCode::kConfig,
                path + ":" + std::to_string(line) + ": record needs 'id' and 'prediction'");
  };
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return out;
  // A single JSON object mapping ids to tokens.
  try {
    json whole = json::parse(text);
    if (whole.is_object() && !whole.contains("id")) {
      for (const auto& [key, value] : whole.items()) out[std::stoi(key)] = value.get<std::string>();
      return out;
    }
    if (whole.is_array()) {
      for (const auto& record : whole) add(record, 0);
      return out;
    }
  } catch (const json::parse_error&) {
    // Not a single document; fall through to JSONL.
  }
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::kConfig, path + ":" + std::to_string(number) + ": " + e.what());
    }
    add(record, number);
  }
  return out;
}

}  // namespace

extern "C" {

const char* vsarena_version(void) { return "0.1.0"; }

const char* vsarena_status_name(vsarena_status status) {
  switch (status) {
    case VSARENA_OK: return "ok";
    case VSARENA_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case VSARENA_ERR_UNKNOWN_ENVIRONMENT: return "unknown-environment";
    case VSARENA_ERR_ILLEGAL_ACTION: return "illegal-action";
    case VSARENA_ERR_TERMINAL_STATE: return "terminal-state";
    case VSARENA_ERR_CONFIG: return "config";
    case VSARENA_ERR_IO: return "io";
    case VSARENA_ERR_REMOTE: return "remote";
    case VSARENA_ERR_POLICY: return "policy";
    case VSARENA_ERR_VERIFY: return "verify";
    case VSARENA_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* vsarena_last_error(void) { return last_error.c_str(); }

void vsarena_free(void* ptr) { std::free(ptr); }

vsarena_status vsarena_set_log_level(const char* level) {
  return Guard([&] {
    Require(level, "level");
    const auto parsed = spdlog::level::from_str(level);
    if (parsed == spdlog::level::off && std::string(level) != "off") {
      throw Error(ErrorCode::kConfig, std::string("unknown log level '") + level + "'");
    }
    spdlog::set_level(parsed);
  });
}

vsarena_status vsarena_catalog(char** out_json) {
  return Guard([&] {
    Require(out_json, "out_json");
    json j;
    j["environments"] = vsarena::RegisteredGames();
    j["benchmark"] = vsarena::BenchmarkGames();
    j["agents"] = vsarena::agents::AgentKinds();
    json oracles = json::object();
    for (const auto& env : vsarena::BenchmarkGames()) {
      oracles[env] = vsarena::agents::OracleSpec(env);
    }
    j["oracles"] = oracles;
    Emit(out_json, j.dump());
  });
}

vsarena_status vsarena_env_create(const char* name, const char* params_json, vsarena_env** out) {
  return Guard([&] {
    Require(name, "name");
    Require(out, "out");
    *out = nullptr;
    auto game = vsarena::MakeGame(name, ParseRequest(params_json));
    *out = new vsarena_env(std::move(game));
  });
}

void vsarena_env_destroy(vsarena_env* env) { delete env; }

namespace {
const vsarena::Environment& Live(const vsarena_env* env) {
  Require(env, "env");
  if (!env->reset) throw Error(ErrorCode::kInvalidArgument, "env: call vsarena_env_reset first");
  return env->env;
}
}  // namespace

vsarena_status vsarena_env_spec(const vsarena_env* env, char** out_json) {
  return Guard([&] {
    Require(env, "env");
    json j = vsarena::ToJson(env->env.spec());
    j["params"] = env->env.game().params();
    Emit(out_json, j.dump());
  });
}

vsarena_status vsarena_env_reset(vsarena_env* env, uint64_t seed) {
  return Guard([&] {
    Require(env, "env");
    env->env.Reset(seed);
    env->reset = true;
  });
}

vsarena_status vsarena_env_step(vsarena_env* env, const char* const* joint, size_t num_agents,
                                char** out_json) {
  return Guard([&] {
    Live(env);
    Require(joint, "joint");
    std::vector<std::string> tokens;
    for (size_t i = 0; i < num_agents; ++i) {
      Require(joint[i], "joint token");
      tokens.emplace_back(joint[i]);
    }
    const auto result = env->env.Step(tokens);
    json events = json::array();
    for (const auto& e : result.events) events.push_back(vsarena::EventTag(e));
    Emit(out_json,
         json{{"rewards", result.rewards}, {"events", events}, {"terminal", result.terminal}}
             .dump());
  });
}

vsarena_status vsarena_env_legal_actions(const vsarena_env* env, int agent, char** out_json) {
  return Guard([&] {
    Require(out_json, "out_json");
    Emit(out_json, json(Live(env).LegalActions(agent)).dump());
  });
}

vsarena_status vsarena_env_is_terminal(const vsarena_env* env, int* out) {
  return Guard([&] {
    Require(out, "out");
    *out = Live(env).IsTerminal() ? 1 : 0;
  });
}

vsarena_status vsarena_env_step_index(const vsarena_env* env, int* out) {
  return Guard([&] {
    Require(out, "out");
    *out = Live(env).step_index();
  });
}

vsarena_status vsarena_env_observe_text(const vsarena_env* env, int agent, char** out_text) {
  return Guard([&] {
    Require(out_text, "out_text");
    Emit(out_text, Live(env).ObserveText(agent));
  });
}

vsarena_status vsarena_env_render_png(const vsarena_env* env, int agent,
                                      unsigned char** out_bytes, size_t* out_size) {
  return Guard([&] {
    Require(out_bytes, "out_bytes");
    Require(out_size, "out_size");
    const auto& live = Live(env);
    if (agent < 0 || agent >= live.spec().num_agents) {
      throw Error(ErrorCode::kInvalidArgument, "agent out of range");
    }
    const std::string png = vsarena::render::RenderPng(live.state(), agent);
    auto* bytes = static_cast<unsigned char*>(std::malloc(png.size()));
    if (bytes == nullptr) throw std::bad_alloc();
    std::memcpy(bytes, png.data(), png.size());
    *out_bytes = bytes;
    *out_size = png.size();
  });
}

vsarena_status vsarena_policy_create(const char* spec, const char* env_name,
                                     const char* remote_json, uint64_t seed,
                                     vsarena_policy** out) {
  return Guard([&] {
    Require(spec, "spec");
    Require(env_name, "env_name");
    Require(out, "out");
    *out = nullptr;
    const auto remote = RemoteFromJson(remote_json ? json::parse(remote_json) : json());
    auto policy = vsarena::agents::MakePolicy(vsarena::agents::ParseAgentSpec(spec),
                                              vsarena::CanonicalGameName(env_name), remote);
    policy->Reset(seed);
    *out = new vsarena_policy{std::move(policy), vsarena::Rng(seed, vsarena::rng_stream::kPolicy)};
  });
}

void vsarena_policy_destroy(vsarena_policy* policy) { delete policy; }

vsarena_status vsarena_policy_name(const vsarena_policy* policy, char** out_name) {
  return Guard([&] {
    Require(policy, "policy");
    Emit(out_name, policy->policy->name());
  });
}

vsarena_status vsarena_policy_act(vsarena_policy* policy, const vsarena_env* env, int agent,
                                  char** out_token) {
  return Guard([&] {
    Require(policy, "policy");
    Require(out_token, "out_token");
    const auto& live = Live(env);
    const auto legal = live.LegalActions(agent);
    if (legal.size() == 1 && legal[0] == vsarena::kNoopToken) {
      Emit(out_token, legal[0]);
      return;
    }
    Emit(out_token, policy->policy->Act(live, agent, policy->rng));
  });
}

vsarena_status vsarena_play(const char* request_json, vsarena_record_fn on_trajectory, void* user,
                            char** out_summary_json) {
  return Guard([&] {
    const json request = ParseRequest(request_json);
    const std::string env = vsarena::CanonicalGameName(RequireString(request, "env"));
    auto game = vsarena::MakeGame(env, request.value("params", json::object()));
    const int num_agents = game->spec().num_agents;
    if (!request.contains("agents") || !request["agents"].is_array()) {
      throw Error(ErrorCode::kConfig, "request: 'agents' must be a list of agent specs");
    }
    std::vector<std::string> specs = request["agents"].get<std::vector<std::string>>();
    if (static_cast<int>(specs.size()) == 1) specs.resize(num_agents, specs[0]);
    if (static_cast<int>(specs.size()) != num_agents) {
      throw Error(ErrorCode::kConfig, "agents: " + env + " needs " + std::to_string(num_agents) +
                                          " agents, got " + std::to_string(specs.size()));
    }
    const auto remote = RemoteFromJson(request.value("remote", json()));
    std::vector<std::unique_ptr<vsarena::Policy>> owned;
    std::vector<vsarena::Policy*> policies;
    std::vector<std::string> names;
    for (const auto& s : specs) {
      owned.push_back(vsarena::agents::MakePolicy(vsarena::agents::ParseAgentSpec(s), env, remote));
      policies.push_back(owned.back().get());
      names.push_back(owned.back()->name());
    }
    const uint64_t seed = request.value("seed", uint64_t{0});
    const int games = request.value("games", 1);
    if (games < 1) throw Error(ErrorCode::kConfig, "games must be positive");
    vsarena::RunOptions options;
    options.max_steps = request.value("max_steps", 0);
    options.record_observations = request.value("record_observations", false);
    const bool competitive = game->spec().interaction == vsarena::InteractionClass::kCompetitive;

    std::vector<std::vector<double>> returns(num_agents);
    std::vector<int> wins(num_agents, 0);
    int draws = 0;
    json results = json::array();
    for (int g = 0; g < games; ++g) {
      const uint64_t game_seed = vsarena::MixSeed(seed, g);
      vsarena::Trajectory t = vsarena::RunEpisode(game, game_seed, policies, options);
      t.participants = specs;
      for (int a = 0; a < num_agents; ++a) returns[a].push_back(t.returns[a]);
      json result = {{"game", g}, {"seed", game_seed}, {"steps", t.steps.size()},
                     {"returns", t.returns}};
      if (competitive) {
        int winner = -1;
        if (t.returns[0] > t.returns[1]) winner = 0;
        if (t.returns[1] > t.returns[0]) winner = 1;
        if (winner < 0) {
          ++draws;
          result["result"] = "draw";
        } else {
          ++wins[winner];
          result["result"] = SeatLabel(env, winner) + " wins";
          result["winner"] = winner;
        }
      }
      results.push_back(result);
      if (on_trajectory != nullptr) on_trajectory(vsarena::ToJsonl(t).c_str(), user);
    }
    json seats = json::array();
    for (int a = 0; a < num_agents; ++a) {
      const auto stat = vsarena::eval::Summarize(returns[a]);
      json seat = {{"seat", a},          {"label", SeatLabel(env, a)}, {"agent", specs[a]},
                   {"policy", names[a]}, {"mean_return", stat.mean},   {"std_return", stat.std}};
      if (competitive) seat["wins"] = wins[a];
      seats.push_back(seat);
    }
    json summary = {{"env", env}, {"seed", seed}, {"games", games}, {"seats", seats},
                    {"results", results}};
    if (competitive) summary["draws"] = draws;
    Emit(out_summary_json, summary.dump());
  });
}

vsarena_status vsarena_eval(const char* request_json, vsarena_record_fn on_trajectory, void* user,
                            char** out_report_json) {
  return Guard([&] {
    const json request = ParseRequest(request_json);
    const std::string env = vsarena::CanonicalGameName(RequireString(request, "env"));
    const std::string agent = RequireString(request, "agent");
    auto protocol = vsarena::eval::DefaultProtocol(env);
    if (request.contains("params")) protocol.game_params = request["params"];
    if (request.contains("opponent")) {
      protocol.opponent_kind = vsarena::eval::OpponentKind::kFixed;
      protocol.opponent = request["opponent"].get<std::string>();
    }
    vsarena::eval::EvalOptions options;
    options.seed = request.value("seed", uint64_t{0});
    options.workers = request.value("workers", 1);
    options.episodes = request.value("episodes", 0);
    options.remote = RemoteFromJson(request.value("remote", json()));
    if (request.contains("mode")) {
      options.remote.mode =
          vsarena::agents::ParseObservationMode(request["mode"].get<std::string>());
    }
    if (on_trajectory != nullptr) {
      options.on_trajectory = [&](const vsarena::Trajectory& t, int) {
        on_trajectory(vsarena::ToJsonl(t).c_str(), user);
      };
    }
    const auto report = vsarena::eval::RunProtocol(protocol, agent,
                                                   vsarena::eval::DefaultReferences(env), options);
    Emit(out_report_json, json{{"report", report.ToJson()}, {"table", report.ToTable()}}.dump());
  });
}

vsarena_status vsarena_reference(const char* env, const char* kind, int episodes, uint64_t seed,
                                 char** out_json) {
  return Guard([&] {
    Require(env, "env");
    Require(kind, "kind");
    const auto values = vsarena::eval::ComputeReference(vsarena::CanonicalGameName(env), kind,
                                                        episodes, seed);
    Emit(out_json, json(values).dump());
  });
}

vsarena_status vsarena_dataset_generate(const char* request_json, const char* out_dir,
                                        char** out_manifest) {
  return Guard([&] {
    Require(out_dir, "out_dir");
    const json request = ParseRequest(request_json);
    vsarena::dataset::DatasetRecipe recipe;
    if (request.contains("recipe")) {
      recipe = vsarena::dataset::RecipeFromJson(request["recipe"]);
      if (request.contains("env") &&
          vsarena::CanonicalGameName(request["env"].get<std::string>()) != recipe.env) {
        throw Error(ErrorCode::kConfig, "recipe is for " + recipe.env + ", not " +
                                            request["env"].get<std::string>());
      }
    } else {
      recipe = vsarena::dataset::DefaultRecipe(
          vsarena::CanonicalGameName(RequireString(request, "env")));
    }
    const auto dataset = vsarena::dataset::GenerateDataset(recipe, request.value("seed", uint64_t{0}));
    vsarena::dataset::WriteDataset(dataset, out_dir);
    Emit(out_manifest, ReadFile(std::string(out_dir) + "/manifest.json"));
  });
}

vsarena_status vsarena_dataset_score(const char* dataset_dir, const char* predictions_path,
                                     int random_reps, uint64_t seed, char** out_json) {
  return Guard([&] {
    Require(dataset_dir, "dataset_dir");
    const auto dataset = vsarena::dataset::ReadDataset(dataset_dir);
    json j = {{"env", dataset.recipe.env}, {"samples", dataset.samples.size()}};
    if (predictions_path != nullptr) {
      const auto predictions = ParsePredictions(ReadFile(predictions_path), predictions_path);
      const auto report = vsarena::dataset::ScorePredictions(dataset.samples, predictions);
      j["total"] = report.total;
      j["correct"] = report.correct;
      j["missing"] = report.missing;
      j["accuracy"] = report.accuracy;
    }
    if (random_reps > 0) {
      vsarena::Rng rng(seed, 0x73636f72);
      j["random_accuracy"] =
          vsarena::dataset::RandomPredictorAccuracy(dataset.samples, rng, random_reps);
    }
    Emit(out_json, j.dump());
  });
}

vsarena_status vsarena_verify(const char* request_json, vsarena_record_fn on_result, void* user,
                              int* out_failures, char** out_json) {
  return Guard([&] {
    const json request = ParseRequest(request_json);
    vsarena::verify::VerifyOptions options;
    options.seed = request.value("seed", uint64_t{0});
    options.episodes = request.value("episodes", options.episodes);
    options.quick = request.value("quick", false);
    auto to_json = [](const vsarena::verify::CheckResult& r) {
      return json{{"module", r.module}, {"invariant", r.invariant}, {"passed", r.passed},
                  {"detail", r.detail}, {"seed", r.seed},           {"seconds", r.seconds}};
    };
    const auto results = vsarena::verify::RunVerify(options, [&](const auto& r) {
      if (on_result != nullptr) on_result(to_json(r).dump().c_str(), user);
    });
    int failures = 0;
    json all = json::array();
    for (const auto& r : results) {
      failures += !r.passed;
      all.push_back(to_json(r));
    }
    if (out_failures != nullptr) *out_failures = failures;
    Emit(out_json, json{{"results", all}, {"failures", failures}}.dump());
  });
}

}  // extern "C"
