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

#include "vsarena/agents/remote.h"

#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <cstring>

#include <spdlog/spdlog.h>

#include "httplib.h"
#include "vsarena/core/environment.h"
#include "vsarena/core/error.h"

namespace vsarena::agents {

using nlohmann::json;

ObservationMode ParseObservationMode(const std::string& name) {
  if (name == "multimodal" || name == "image") return ObservationMode::kMultimodal;
  if (name == "text-only" || name == "text") return ObservationMode::kTextOnly;
  throw Error(ErrorCode::kConfig, "unknown observation mode '" + name +
                                      "' (expected multimodal or text-only)");
}

const char* ObservationModeName(ObservationMode mode) {
  return mode == ObservationMode::kTextOnly ? "text-only" : "multimodal";
}

json RequestToJson(const RemoteRequest& request) {
  json j;
  j["env"] = request.env;
  j["step"] = request.step;
  j["agent"] = request.agent;
  j["kind"] = request.kind;
  j["mode"] = ObservationModeName(request.mode);
  j["text"] = request.text;
  j["legal"] = request.legal;
  if (request.mode == ObservationMode::kMultimodal) {
    json frames = json::array();
    for (const auto& png : request.frames) frames.push_back(httplib::detail::base64_encode(png));
    j["frames"] = std::move(frames);
  }
  return j;
}

namespace {

class HttpTransport : public Transport {
 public:
  HttpTransport(const std::string& endpoint, const std::string& api_key, double timeout)
      : endpoint_(endpoint) {
    static const std::string kScheme = "http://";
    if (endpoint.rfind("https://", 0) == 0) {
      throw Error(ErrorCode::kConfig,
                  "https endpoints are not supported; use http:// or a local proxy");
    }
    if (endpoint.rfind(kScheme, 0) != 0) {
      throw Error(ErrorCode::kConfig, "endpoint must start with http:// or stdio: (got '" +
                                          endpoint + "')");
    }
    const size_t slash = endpoint.find('/', kScheme.size());
    const std::string host = endpoint.substr(0, slash);
    path_ = slash == std::string::npos ? "/" : endpoint.substr(slash);
    client_ = std::make_unique<httplib::Client>(host);
    const auto secs = std::chrono::duration<double>(timeout);
    client_->set_connection_timeout(std::chrono::duration_cast<std::chrono::microseconds>(secs));
    client_->set_read_timeout(std::chrono::duration_cast<std::chrono::microseconds>(secs));
    client_->set_write_timeout(std::chrono::duration_cast<std::chrono::microseconds>(secs));
    if (!api_key.empty()) client_->set_bearer_token_auth(api_key);
  }

  json Exchange(const json& request) override {
    auto res = client_->Post(path_, request.dump(), "application/json");
    if (!res) {
      throw Error(ErrorCode::kRemote,
                  "request to " + endpoint_ + " failed: " + httplib::to_string(res.error()));
    }
    if (res->status != 200) {
      throw Error(ErrorCode::kRemote,
                  endpoint_ + " answered HTTP " + std::to_string(res->status));
    }
    try {
      return json::parse(res->body);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kRemote, "reply is not JSON: " + std::string(e.what()));
    }
  }

  std::string Describe() const override { return endpoint_; }

 private:
  std::string endpoint_;
  std::string path_;
  std::unique_ptr<httplib::Client> client_;
};

class StdioTransport : public Transport {
 public:
  StdioTransport(const std::string& command, double timeout)
      : command_(command), timeout_ms_(static_cast<int>(timeout * 1000)) {
    int to_child[2], from_child[2];
    if (pipe(to_child) != 0 || pipe(from_child) != 0) {
      throw Error(ErrorCode::kRemote, "pipe: " + std::string(std::strerror(errno)));
    }
    pid_ = fork();
    if (pid_ < 0) throw Error(ErrorCode::kRemote, "fork: " + std::string(std::strerror(errno)));
    if (pid_ == 0) {
      dup2(to_child[0], STDIN_FILENO);
      dup2(from_child[1], STDOUT_FILENO);
      close(to_child[0]);
      close(to_child[1]);
      close(from_child[0]);
      close(from_child[1]);
      execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
      _exit(127);
    }
    close(to_child[0]);
    close(from_child[1]);
    write_fd_ = to_child[1];
    read_fd_ = from_child[0];
    signal(SIGPIPE, SIG_IGN);
  }

  ~StdioTransport() override {
    close(write_fd_);
    close(read_fd_);
    if (pid_ > 0) {
      int status = 0;
      if (waitpid(pid_, &status, WNOHANG) == 0) {
        kill(pid_, SIGTERM);
        waitpid(pid_, &status, 0);
      }
    }
  }

  json Exchange(const json& request) override {
    const std::string line = request.dump() + "\n";
    size_t written = 0;
    while (written < line.size()) {
      const ssize_t n = write(write_fd_, line.data() + written, line.size() - written);
      if (n <= 0) throw Error(ErrorCode::kRemote, "agent process closed its input");
      written += static_cast<size_t>(n);
    }
    std::string reply;
    while (true) {
      const size_t newline = buffer_.find('\n');
      if (newline != std::string::npos) {
        reply = buffer_.substr(0, newline);
        buffer_.erase(0, newline + 1);
        break;
      }
      pollfd pfd{read_fd_, POLLIN, 0};
      const int ready = poll(&pfd, 1, timeout_ms_);
      if (ready == 0) throw Error(ErrorCode::kRemote, "agent process timed out");
      if (ready < 0) throw Error(ErrorCode::kRemote, "poll: " + std::string(std::strerror(errno)));
      char chunk[4096];
      const ssize_t n = read(read_fd_, chunk, sizeof(chunk));
      if (n <= 0) throw Error(ErrorCode::kRemote, "agent process closed its output");
      buffer_.append(chunk, static_cast<size_t>(n));
    }
    try {
      return json::parse(reply);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kRemote, "reply is not JSON: " + std::string(e.what()));
    }
  }

  std::string Describe() const override { return "stdio:" + command_; }

 private:
  std::string command_;
  int timeout_ms_;
  pid_t pid_ = -1;
  int write_fd_ = -1;
  int read_fd_ = -1;
  std::string buffer_;
};

std::string Getenv(const char* name) {
  const char* value = std::getenv(name);
  return value == nullptr ? "" : value;
}

}  // namespace

std::unique_ptr<Transport> MakeHttpTransport(const std::string& endpoint,
                                             const std::string& api_key,
                                             double timeout_seconds) {
  return std::make_unique<HttpTransport>(endpoint, api_key, timeout_seconds);
}

std::unique_ptr<Transport> MakeStdioTransport(const std::string& command) {
  return std::make_unique<StdioTransport>(command, 60.0);
}

RemoteConfig RemoteConfigFromEnv() {
  RemoteConfig config;
  config.endpoint = Getenv("VSARENA_ENDPOINT");
  config.api_key = Getenv("VSARENA_API_KEY");
  const std::string timeout = Getenv("VSARENA_TIMEOUT");
  if (!timeout.empty()) {
    try {
      config.timeout_seconds = std::stod(timeout);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kConfig, "VSARENA_TIMEOUT is not a number: " + timeout);
    }
    if (config.timeout_seconds <= 0) {
      throw Error(ErrorCode::kConfig, "VSARENA_TIMEOUT must be positive");
    }
  }
  return config;
}

std::unique_ptr<Transport> MakeTransport(const RemoteConfig& config) {
  if (config.endpoint.empty()) {
    throw Error(ErrorCode::kConfig, "remote agent needs an endpoint (set VSARENA_ENDPOINT)");
  }
  if (config.endpoint.rfind("stdio:", 0) == 0) {
    return std::make_unique<StdioTransport>(config.endpoint.substr(6), config.timeout_seconds);
  }
  return MakeHttpTransport(config.endpoint, config.api_key, config.timeout_seconds);
}

RemoteClient::RemoteClient(std::unique_ptr<Transport> transport, RemoteConfig config)
    : transport_(std::move(transport)), config_(std::move(config)) {}

std::string RemoteClient::Query(const RemoteRequest& request, Rng& rng) {
  if (request.legal.empty()) throw Error(ErrorCode::kPolicy, "remote query with no legal actions");
  ++requests_;
  const json body = RequestToJson(request);
  std::string problem;
  for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
    json reply;
    try {
      reply = transport_->Exchange(body);
    } catch (const Error& e) {
      problem = e.what();
      spdlog::warn("remote agent {} attempt {}: {}", transport_->Describe(), attempt + 1,
                   problem);
      continue;
    }
    if (!reply.is_object() || !reply.contains("token") || !reply["token"].is_string()) {
      problem = "reply has no string 'token' field";
      break;
    }
    const std::string token = reply["token"].get<std::string>();
    if (std::find(request.legal.begin(), request.legal.end(), token) != request.legal.end()) {
      return token;
    }
    problem = "reply '" + token + "' is not a legal action";
    break;
  }
  ++fallbacks_;
  const std::string fallback = request.legal[rng.Uniform(request.legal.size())];
  spdlog::warn("remote agent fallback at {} step {} ({}): {}; using {}", request.env,
               request.step, request.kind, problem, fallback);
  return fallback;
}

RemotePolicy::RemotePolicy(std::shared_ptr<RemoteClient> client) : client_(std::move(client)) {}

RemoteRequest RemotePolicy::Build(const Environment& env, int agent, int subject,
                                  const std::string& kind) const {
  RemoteRequest request;
  request.env = env.spec().name;
  request.step = env.step_index();
  request.agent = agent;
  request.kind = kind;
  request.mode = client_->config().mode;
  request.text = env.ObserveText(agent);
  if (request.mode == ObservationMode::kMultimodal) {
    request.frames = env.ObserveFrames(agent, client_->config().frames);
  }
  request.legal = env.LegalActions(subject);
  return request;
}

std::string RemotePolicy::Act(const Environment& env, int agent, Rng& rng) {
  return client_->Query(Build(env, agent, agent, "act"), rng);
}

std::string RemotePolicy::PredictOther(const Environment& env, int agent, Rng& rng) {
  return client_->Query(Build(env, agent, 1 - agent, "predict"), rng);
}

std::string RemotePolicy::name() const { return "remote"; }

}  // namespace vsarena::agents
