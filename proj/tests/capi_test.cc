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

// Exercises the shared library through its C header only.

#include <cstring>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "vsarena/vsarena.h"

namespace {

std::string Take(char* s) {
  std::string out = s ? s : "";
  vsarena_free(s);
  return out;
}

TEST_CASE("environment handles") {
  vsarena_env* env = nullptr;
  REQUIRE(vsarena_env_create("kuhn", nullptr, &env) == VSARENA_OK);
  int terminal = -1;
  CHECK(vsarena_env_is_terminal(env, &terminal) == VSARENA_ERR_INVALID_ARGUMENT);
  REQUIRE(vsarena_env_reset(env, 7) == VSARENA_OK);
  char* raw = nullptr;
  REQUIRE(vsarena_env_legal_actions(env, 0, &raw) == VSARENA_OK);
  const auto legal = nlohmann::json::parse(Take(raw));
  CHECK(legal.size() == 2);

  const char* bad[] = {"<RAISE>", "<NOOP>"};
  CHECK(vsarena_env_step(env, bad, 2, &raw) == VSARENA_ERR_ILLEGAL_ACTION);
  CHECK(std::string(vsarena_last_error()).find("<RAISE>") != std::string::npos);

  const char* pass0[] = {"<PASS>", "<NOOP>"};
  const char* pass1[] = {"<NOOP>", "<PASS>"};
  REQUIRE(vsarena_env_step(env, pass0, 2, &raw) == VSARENA_OK);
  vsarena_free(raw);
  REQUIRE(vsarena_env_step(env, pass1, 2, &raw) == VSARENA_OK);
  const auto result = nlohmann::json::parse(Take(raw));
  CHECK(result["terminal"] == true);
  CHECK(result["rewards"][0].get<double>() == -result["rewards"][1].get<double>());
  CHECK(vsarena_env_step(env, pass0, 2, &raw) == VSARENA_ERR_TERMINAL_STATE);

  unsigned char* png = nullptr;
  size_t size = 0;
  REQUIRE(vsarena_env_render_png(env, 0, &png, &size) == VSARENA_OK);
  REQUIRE(size > 8);
  CHECK(std::memcmp(png + 1, "PNG", 3) == 0);
  vsarena_free(png);
  CHECK(vsarena_env_render_png(env, 5, &png, &size) == VSARENA_ERR_INVALID_ARGUMENT);
  vsarena_env_destroy(env);

  CHECK(vsarena_env_create("chess", nullptr, &env) == VSARENA_ERR_UNKNOWN_ENVIRONMENT);
  CHECK(env == nullptr);
  CHECK(vsarena_env_create("pong", "{\"bogus\": 1}", &env) == VSARENA_ERR_CONFIG);
  CHECK(vsarena_env_create("pong", "{not json", &env) == VSARENA_ERR_CONFIG);
  CHECK(vsarena_env_reset(nullptr, 0) == VSARENA_ERR_INVALID_ARGUMENT);
}

TEST_CASE("policy handles play a full game") {
  vsarena_env* env = nullptr;
  REQUIRE(vsarena_env_create("tic_tac_toe", nullptr, &env) == VSARENA_OK);
  REQUIRE(vsarena_env_reset(env, 1) == VSARENA_OK);
  vsarena_policy* policies[2] = {nullptr, nullptr};
  REQUIRE(vsarena_policy_create("minimax:depth=9", "tic_tac_toe", nullptr, 1, &policies[0]) ==
          VSARENA_OK);
  REQUIRE(vsarena_policy_create("random", "tic_tac_toe", nullptr, 2, &policies[1]) ==
          VSARENA_OK);
  char* name = nullptr;
  REQUIRE(vsarena_policy_name(policies[0], &name) == VSARENA_OK);
  CHECK(Take(name).find("minimax") != std::string::npos);
  int terminal = 0;
  double total0 = 0.0;
  while (vsarena_env_is_terminal(env, &terminal) == VSARENA_OK && !terminal) {
    std::string tokens[2];
    for (int a = 0; a < 2; ++a) {
      char* token = nullptr;
      REQUIRE(vsarena_policy_act(policies[a], env, a, &token) == VSARENA_OK);
      tokens[a] = Take(token);
    }
    const char* joint[] = {tokens[0].c_str(), tokens[1].c_str()};
    char* raw = nullptr;
    REQUIRE(vsarena_env_step(env, joint, 2, &raw) == VSARENA_OK);
    total0 += nlohmann::json::parse(Take(raw))["rewards"][0].get<double>();
  }
  CHECK(total0 >= 0.0);
  vsarena_policy_destroy(policies[0]);
  vsarena_policy_destroy(policies[1]);
  vsarena_env_destroy(env);

  vsarena_policy* p = nullptr;
  CHECK(vsarena_policy_create("pong-bot", "hanabi", nullptr, 0, &p) == VSARENA_ERR_CONFIG);
  CHECK(p == nullptr);
}

TEST_CASE("play and eval pipelines") {
  std::string jsonl;
  char* raw = nullptr;
  const char* request =
      R"({"env": "kuhn", "agents": ["ne:alpha=0", "ne:alpha=0"], "games": 4, "seed": 3})";
  REQUIRE(vsarena_play(
              request, [](const char* r, void* u) { *static_cast<std::string*>(u) += r; },
              &jsonl, &raw) == VSARENA_OK);
  const auto summary = nlohmann::json::parse(Take(raw));
  CHECK(summary["games"] == 4);
  CHECK(summary["seats"].size() == 2);
  CHECK(std::count(jsonl.begin(), jsonl.end(), '\n') > 8);

  CHECK(vsarena_play(R"({"env": "kuhn", "agents": ["a", "b", "c"]})", nullptr, nullptr, &raw) ==
        VSARENA_ERR_CONFIG);
  REQUIRE(vsarena_eval(R"({"env": "overcooked", "agent": "scripted-oracle"})", nullptr, nullptr,
                       &raw) == VSARENA_OK);
  const auto eval = nlohmann::json::parse(Take(raw));
  CHECK(eval["report"]["raw"]["mean"] == 40.0);

  REQUIRE(vsarena_catalog(&raw) == VSARENA_OK);
  CHECK(nlohmann::json::parse(Take(raw))["benchmark"].size() == 8);
  CHECK(std::string(vsarena_status_name(VSARENA_ERR_REMOTE)) == "remote");
  CHECK(vsarena_set_log_level("loud") == VSARENA_ERR_CONFIG);
}

}  // namespace
