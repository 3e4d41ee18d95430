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

#ifndef VSARENA_AGENTS_REMOTE_H_
#define VSARENA_AGENTS_REMOTE_H_

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "vsarena/core/policy.h"

namespace vsarena::agents {

enum class ObservationMode { kMultimodal, kTextOnly };

ObservationMode ParseObservationMode(const std::string& name);
const char* ObservationModeName(ObservationMode mode);

// One question put to an external model. `kind` is "act" for the agent's
// own move and "predict" for the other agent's next move.
struct RemoteRequest {
  std::string env;
  int step = 0;
  int agent = 0;
  std::vector<std::string> frames;  // PNG bytes, oldest first.
  std::string text;
  std::vector<std::string> legal;
  ObservationMode mode = ObservationMode::kMultimodal;
  std::string kind = "act";
};

// Wire format: frames are base64 PNGs and are left out in text-only mode.
nlohmann::json RequestToJson(const RemoteRequest& request);

// Moves one JSON document to the model and returns its reply. Failures
// throw Error(kRemote).
class Transport {
 public:
  virtual ~Transport() = default;
  virtual nlohmann::json Exchange(const nlohmann::json& request) = 0;
  virtual std::string Describe() const = 0;
};

// POST to `<endpoint>` with an optional bearer token.
std::unique_ptr<Transport> MakeHttpTransport(const std::string& endpoint,
                                             const std::string& api_key,
                                             double timeout_seconds);

// Spawns `command` through /bin/sh and exchanges one JSON document per
// line over its stdin/stdout.
std::unique_ptr<Transport> MakeStdioTransport(const std::string& command);

struct RemoteConfig {
  std::string endpoint;  // http(s)://... or stdio:<command>
  std::string api_key;
  double timeout_seconds = 60.0;
  int max_retries = 3;
  ObservationMode mode = ObservationMode::kMultimodal;
  // Frames per request; 0 uses the environment's history depth.
  int frames = 0;
};

// Reads VSARENA_ENDPOINT, VSARENA_API_KEY and VSARENA_TIMEOUT.
RemoteConfig RemoteConfigFromEnv();

std::unique_ptr<Transport> MakeTransport(const RemoteConfig& config);

// Client side of the agent protocol. Transport failures are retried up to
// max_retries times; unusable replies (after retries, unparseable or not
// in the legal set) fall back to a uniform legal token and are logged.
class RemoteClient {
 public:
  RemoteClient(std::unique_ptr<Transport> transport, RemoteConfig config);

  std::string Query(const RemoteRequest& request, Rng& rng);

  const RemoteConfig& config() const { return config_; }
  int requests() const { return requests_; }
  int fallbacks() const { return fallbacks_; }

 private:
  std::unique_ptr<Transport> transport_;
  RemoteConfig config_;
  int requests_ = 0;
  int fallbacks_ = 0;
};

class RemotePolicy : public Policy {
 public:
  explicit RemotePolicy(std::shared_ptr<RemoteClient> client);
  std::string Act(const Environment& env, int agent, Rng& rng) override;
  std::string PredictOther(const Environment& env, int agent, Rng& rng) override;
  std::string name() const override;

 private:
  RemoteRequest Build(const Environment& env, int agent, int subject,
                      const std::string& kind) const;

  std::shared_ptr<RemoteClient> client_;
};

}  // namespace vsarena::agents

#endif  // VSARENA_AGENTS_REMOTE_H_
