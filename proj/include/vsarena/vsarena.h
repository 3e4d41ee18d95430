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

/* C interface to the arena: environments, baseline policies, and the
 * evaluation, dataset and verification pipelines.
 *
 * Every function returns a vsarena_status. On failure the message is
 * available from vsarena_last_error() until the next call on the same
 * thread. Strings and buffers returned through out-parameters are owned by
 * the caller and released with vsarena_free(). Structured results are JSON
 * documents.
 */
#ifndef VSARENA_VSARENA_H_
#define VSARENA_VSARENA_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define VSARENA_API __declspec(dllexport)
#else
#define VSARENA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  VSARENA_OK = 0,
  VSARENA_ERR_INVALID_ARGUMENT = 1,
  VSARENA_ERR_UNKNOWN_ENVIRONMENT = 2,
  VSARENA_ERR_ILLEGAL_ACTION = 3,
  VSARENA_ERR_TERMINAL_STATE = 4,
  VSARENA_ERR_CONFIG = 5,
  VSARENA_ERR_IO = 6,
  VSARENA_ERR_REMOTE = 7,
  VSARENA_ERR_POLICY = 8,
  VSARENA_ERR_VERIFY = 9,
  VSARENA_ERR_INTERNAL = 10,
} vsarena_status;

typedef struct vsarena_env vsarena_env;
typedef struct vsarena_policy vsarena_policy;

/* Receives one text record (a JSONL trajectory, a verify result, ...). */
typedef void (*vsarena_record_fn)(const char* record, void* user);

VSARENA_API const char* vsarena_version(void);
VSARENA_API const char* vsarena_status_name(vsarena_status status);
VSARENA_API const char* vsarena_last_error(void);
VSARENA_API void vsarena_free(void* ptr);
/* "trace", "debug", "info", "warn", "error" or "off". */
VSARENA_API vsarena_status vsarena_set_log_level(const char* level);

/* Registered environment names, agent kinds and aliases as JSON. */
VSARENA_API vsarena_status vsarena_catalog(char** out_json);

/* ---- Environments ---- */

/* `params_json` may be NULL or "{}" for defaults. */
VSARENA_API vsarena_status vsarena_env_create(const char* name, const char* params_json,
                                              vsarena_env** out);
VSARENA_API void vsarena_env_destroy(vsarena_env* env);
/* Spec of the environment (name, interaction class, horizon, vocabulary). */
VSARENA_API vsarena_status vsarena_env_spec(const vsarena_env* env, char** out_json);
VSARENA_API vsarena_status vsarena_env_reset(vsarena_env* env, uint64_t seed);
/* `joint` holds one token per agent. The result has "rewards", "events" and
 * "terminal". */
VSARENA_API vsarena_status vsarena_env_step(vsarena_env* env, const char* const* joint,
                                            size_t num_agents, char** out_json);
VSARENA_API vsarena_status vsarena_env_legal_actions(const vsarena_env* env, int agent,
                                                     char** out_json);
VSARENA_API vsarena_status vsarena_env_is_terminal(const vsarena_env* env, int* out);
VSARENA_API vsarena_status vsarena_env_step_index(const vsarena_env* env, int* out);
VSARENA_API vsarena_status vsarena_env_observe_text(const vsarena_env* env, int agent,
                                                    char** out_text);
/* PNG of the agent's current view. */
VSARENA_API vsarena_status vsarena_env_render_png(const vsarena_env* env, int agent,
                                                  unsigned char** out_bytes, size_t* out_size);

/* ---- Policies ---- */

/* `spec` is an agent spec such as "minimax:depth=5" for environment
 * `env_name`. `remote_json` (may be NULL) overrides endpoint, api_key,
 * timeout, retries, mode and frames for remote agents; unset fields come from
 * the VSARENA_* environment variables. */
VSARENA_API vsarena_status vsarena_policy_create(const char* spec, const char* env_name,
                                                 const char* remote_json, uint64_t seed,
                                                 vsarena_policy** out);
VSARENA_API void vsarena_policy_destroy(vsarena_policy* policy);
VSARENA_API vsarena_status vsarena_policy_name(const vsarena_policy* policy, char** out_name);
VSARENA_API vsarena_status vsarena_policy_act(vsarena_policy* policy, const vsarena_env* env,
                                              int agent, char** out_token);

/* ---- Pipelines ---- */

/* Plays games. Request keys: env, params, agents (list of specs), seed,
 * games, max_steps, record_observations, remote. Each trajectory is passed
 * to `on_trajectory` as JSONL; the summary is returned. */
VSARENA_API vsarena_status vsarena_play(const char* request_json, vsarena_record_fn on_trajectory,
                                        void* user, char** out_summary_json);

/* Runs the evaluation protocol. Request keys: env, agent, seed, episodes,
 * workers, mode, remote, params. Returns {"report": ..., "table": "..."}. */
VSARENA_API vsarena_status vsarena_eval(const char* request_json, vsarena_record_fn on_trajectory,
                                        void* user, char** out_report_json);

/* Monte-Carlo reference returns of the "random" or "oracle" agent. */
VSARENA_API vsarena_status vsarena_reference(const char* env, const char* kind, int episodes,
                                             uint64_t seed, char** out_json);

/* Generates a dataset into `out_dir`. Request keys: env, seed, recipe
 * (optional full recipe object). Returns the manifest. */
VSARENA_API vsarena_status vsarena_dataset_generate(const char* request_json,
                                                    const char* out_dir, char** out_manifest);

/* Scores a predictions file against a dataset directory. Predictions are
 * JSONL records {"id": n, "prediction": "<TOKEN>"} or one JSON object
 * mapping ids to tokens. `random_reps` > 0 adds the random-predictor
 * accuracy averaged over that many draws. */
VSARENA_API vsarena_status vsarena_dataset_score(const char* dataset_dir,
                                                 const char* predictions_path, int random_reps,
                                                 uint64_t seed, char** out_json);

/* Runs the invariant suite. Request keys: seed, episodes, quick. Each
 * result is passed to `on_result` as JSON. `out_failures` receives the
 * failure count. */
VSARENA_API vsarena_status vsarena_verify(const char* request_json, vsarena_record_fn on_result,
                                          void* user, int* out_failures, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* VSARENA_VSARENA_H_ */
