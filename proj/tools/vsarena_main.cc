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

// Command-line front end. Everything goes through the C API in vsarena.h.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vsarena/vsarena.h"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;
constexpr int kExitVerify = 4;

// Carries a C API failure up to main.
struct ApiFailure {
  vsarena_status status;
  std::string message;
};

int ExitCodeFor(vsarena_status status) {
  switch (status) {
    case VSARENA_OK:
      return kExitOk;
    case VSARENA_ERR_INVALID_ARGUMENT:
    case VSARENA_ERR_UNKNOWN_ENVIRONMENT:
    case VSARENA_ERR_CONFIG:
      return kExitConfig;
    case VSARENA_ERR_VERIFY:
      return kExitVerify;
    default:
      return kExitRuntime;
  }
}

void Check(vsarena_status status, const std::string& context) {
  if (status != VSARENA_OK) {
    throw ApiFailure{status, context + ": " + vsarena_last_error()};
  }
}

// Takes ownership of a string returned by the library.
std::string Take(char* s) {
  std::string out = s ? s : "";
  vsarena_free(s);
  return out;
}

void WriteFile(const fs::path& path, const std::string& contents) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ApiFailure{VSARENA_ERR_IO, "cannot write " + path.string()};
  out << contents;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ApiFailure{VSARENA_ERR_CONFIG, "cannot read " + path.string()};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string Format(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

// Splits "a:x=1,y=2,b" into agent specs the way the library does: a piece
// without ':' that contains '=' belongs to the previous agent.
std::vector<std::string> SplitAgents(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    if (piece.empty()) continue;
    const bool continues = piece.find(':') == std::string::npos &&
                           piece.find('=') != std::string::npos && !out.empty();
    if (continues) {
      out.back() += "," + piece;
    } else {
      out.push_back(piece);
    }
  }
  return out;
}

struct RemoteFlags {
  std::string endpoint;
  double timeout = 0.0;
  int retries = -1;
  std::string mode = "multimodal";
  int frames = 0;

  void Add(CLI::App* app) {
    app->add_option("--endpoint", endpoint,
                    "Remote agent endpoint (http://host:port/path or stdio:<command>); "
                    "defaults to $VSARENA_ENDPOINT");
    app->add_option("--timeout", timeout, "Remote request timeout in seconds");
    app->add_option("--retries", retries, "Remote retries per request");
    app->add_option("--mode", mode, "Observation mode passed to remote agents")
        ->check(CLI::IsMember({"multimodal", "text-only", "image", "text"}));
    app->add_option("--frames", frames, "Frames per remote request (0: env default)");
  }

  json ToJson() const {
    json j = {{"mode", mode}};
    if (!endpoint.empty()) j["endpoint"] = endpoint;
    if (timeout > 0.0) j["timeout"] = timeout;
    if (retries >= 0) j["retries"] = retries;
    if (frames > 0) j["frames"] = frames;
    return j;
  }
};

struct Options {
  std::string out = "vsarena_out";
  uint64_t seed = 0;
  std::string log_level = "warn";
};

// ---- play ----

struct PlayFlags {
  std::string env;
  std::string agents;
  int games = 1;
  int max_steps = 0;
  bool observations = false;
  RemoteFlags remote;
};

int RunPlay(const Options& options, const PlayFlags& flags) {
  json request = {{"env", flags.env},
                  {"agents", SplitAgents(flags.agents)},
                  {"seed", options.seed},
                  {"games", flags.games},
                  {"max_steps", flags.max_steps},
                  {"record_observations", flags.observations},
                  {"remote", flags.remote.ToJson()}};
  std::string jsonl;
  char* summary_raw = nullptr;
  Check(vsarena_play(
            request.dump().c_str(),
            [](const char* record, void* user) { *static_cast<std::string*>(user) += record; },
            &jsonl, &summary_raw),
        "play");
  const json summary = json::parse(Take(summary_raw));
  const fs::path dir = fs::path(options.out) / "play" / summary["env"].get<std::string>();
  WriteFile(dir / "trajectories.jsonl", jsonl);
  WriteFile(dir / "summary.json", summary.dump(2) + "\n");

  for (const auto& r : summary["results"]) {
    std::cout << "game " << r["game"] << " (seed " << r["seed"] << ", " << r["steps"]
              << " steps): ";
    if (r.contains("result")) std::cout << r["result"].get<std::string>() << ", ";
    std::cout << "returns";
    for (const auto& v : r["returns"]) std::cout << " " << Format("%.3f", v.get<double>());
    std::cout << "\n";
  }
  for (const auto& s : summary["seats"]) {
    std::cout << s["label"].get<std::string>() << " " << s["agent"].get<std::string>()
              << ": mean return " << Format("%.4f", s["mean_return"].get<double>()) << " (std "
              << Format("%.4f", s["std_return"].get<double>()) << ")";
    if (s.contains("wins")) std::cout << ", wins " << s["wins"];
    std::cout << "\n";
  }
  if (summary.contains("draws")) std::cout << "draws " << summary["draws"] << "\n";
  std::cout << "wrote " << (dir / "trajectories.jsonl").string() << "\n";
  return kExitOk;
}

// ---- eval ----

struct EvalFlags {
  std::vector<std::string> envs;
  std::string agent;
  std::string opponent;
  int episodes = 0;
  int workers = 1;
  bool json_output = false;
  RemoteFlags remote;
};

int RunEval(const Options& options, EvalFlags flags) {
  if (flags.envs.size() == 1 && flags.envs[0] == "all") {
    char* raw = nullptr;
    Check(vsarena_catalog(&raw), "catalog");
    flags.envs = json::parse(Take(raw))["benchmark"].get<std::vector<std::string>>();
  }
  std::vector<double> normalized;
  json reports = json::array();
  for (const auto& env : flags.envs) {
    json request = {{"env", env},
                    {"agent", flags.agent},
                    {"seed", options.seed},
                    {"episodes", flags.episodes},
                    {"workers", flags.workers},
                    {"mode", flags.remote.mode},
                    {"remote", flags.remote.ToJson()}};
    if (!flags.opponent.empty()) request["opponent"] = flags.opponent;
    std::string jsonl;
    char* raw = nullptr;
    Check(vsarena_eval(
              request.dump().c_str(),
              [](const char* record, void* user) { *static_cast<std::string*>(user) += record; },
              &jsonl, &raw),
          "eval " + env);
    const json result = json::parse(Take(raw));
    const json& report = result["report"];
    const fs::path dir = fs::path(options.out) / "eval" / report["env"].get<std::string>();
    WriteFile(dir / "report.json", report.dump(2) + "\n");
    WriteFile(dir / "trajectories.jsonl", jsonl);
    if (!flags.json_output) std::cout << result["table"].get<std::string>() << "\n";
    normalized.push_back(report["normalized"]["mean"].get<double>());
    reports.push_back(report);
  }
  if (flags.json_output) std::cout << reports.dump(2) << "\n";
  if (flags.envs.size() > 1) {
    double total = 0.0;
    for (double v : normalized) total += v;
    std::cout << "overall normalized score " << Format("%.2f", total / normalized.size())
              << " over " << normalized.size() << " environments\n";
  }
  return kExitOk;
}

// ---- dataset ----

struct DatasetFlags {
  std::string env;
  std::string recipe;
  std::string dataset;
  std::string predictions;
  int random_reps = 0;
};

fs::path DatasetDir(const Options& options, const DatasetFlags& flags) {
  if (!flags.dataset.empty()) return flags.dataset;
  if (flags.env.empty()) {
    throw ApiFailure{VSARENA_ERR_CONFIG, "dataset: give --env or --dataset"};
  }
  return fs::path(options.out) / "dataset" / flags.env;
}

int RunDatasetGen(const Options& options, const DatasetFlags& flags) {
  json request = {{"seed", options.seed}};
  if (!flags.env.empty()) request["env"] = flags.env;
  if (!flags.recipe.empty()) request["recipe"] = json::parse(ReadFile(flags.recipe));
  if (flags.env.empty() && flags.recipe.empty()) {
    throw ApiFailure{VSARENA_ERR_CONFIG, "dataset gen: give --env or --recipe"};
  }
  fs::path dir = flags.dataset;
  if (dir.empty()) {
    const std::string env = flags.env.empty() ? request["recipe"].value("env", "custom") : flags.env;
    dir = fs::path(options.out) / "dataset" / env;
  }
  char* raw = nullptr;
  Check(vsarena_dataset_generate(request.dump().c_str(), dir.string().c_str(), &raw),
        "dataset gen");
  const json manifest = json::parse(Take(raw));
  std::cout << manifest["env"].get<std::string>() << ": " << manifest["num_samples"]
            << " samples in " << dir.string() << "\n";
  for (const auto& [group, count] : manifest["group_counts"].items()) {
    std::cout << "  " << group << ": " << count << "\n";
  }
  for (const auto& note : manifest.value("deviations", json::array())) {
    std::cout << "  note: " << note.get<std::string>() << "\n";
  }
  return kExitOk;
}

int RunDatasetScore(const Options& options, const DatasetFlags& flags) {
  const fs::path dir = DatasetDir(options, flags);
  if (!fs::exists(dir / "manifest.json")) {
    throw ApiFailure{VSARENA_ERR_CONFIG, "no dataset at " + dir.string()};
  }
  if (flags.predictions.empty() && flags.random_reps <= 0) {
    throw ApiFailure{VSARENA_ERR_CONFIG, "dataset score: give --pred or --random"};
  }
  char* raw = nullptr;
  Check(vsarena_dataset_score(dir.string().c_str(),
                              flags.predictions.empty() ? nullptr : flags.predictions.c_str(),
                              flags.random_reps, options.seed, &raw),
        "dataset score");
  const json score = json::parse(Take(raw));
  if (score.contains("accuracy")) {
    std::cout << "accuracy " << Format("%.2f", score["accuracy"].get<double>()) << "% ("
              << score["correct"] << "/" << score["total"] << ", " << score["missing"]
              << " missing)\n";
  }
  if (score.contains("random_accuracy")) {
    std::cout << "random predictor " << Format("%.2f", score["random_accuracy"].get<double>())
              << "%\n";
  }
  return kExitOk;
}

// ---- render ----

struct RenderFlags {
  std::string env;
  std::string agents = "random";
  std::string trajectory;
  std::vector<int> views;
  int max_steps = 0;
  bool text = true;
  RemoteFlags remote;
};

class EnvHandle {
 public:
  EnvHandle(const std::string& name, const json& params) {
    Check(vsarena_env_create(name.c_str(), params.dump().c_str(), &env_), "env " + name);
  }
  ~EnvHandle() { vsarena_env_destroy(env_); }
  EnvHandle(const EnvHandle&) = delete;
  EnvHandle& operator=(const EnvHandle&) = delete;
  vsarena_env* get() const { return env_; }

 private:
  vsarena_env* env_ = nullptr;
};

class PolicyHandle {
 public:
  PolicyHandle(const std::string& spec, const std::string& env, const json& remote,
               uint64_t seed) {
    Check(vsarena_policy_create(spec.c_str(), env.c_str(), remote.dump().c_str(), seed,
                                &policy_),
          "agent " + spec);
  }
  ~PolicyHandle() { vsarena_policy_destroy(policy_); }
  PolicyHandle(const PolicyHandle&) = delete;
  PolicyHandle& operator=(const PolicyHandle&) = delete;
  vsarena_policy* get() const { return policy_; }

 private:
  vsarena_policy* policy_ = nullptr;
};

void DumpFrame(const fs::path& dir, const EnvHandle& env, int step, int agent, bool text) {
  unsigned char* bytes = nullptr;
  size_t size = 0;
  Check(vsarena_env_render_png(env.get(), agent, &bytes, &size), "render");
  const std::string png(reinterpret_cast<const char*>(bytes), size);
  vsarena_free(bytes);
  char name[64];
  std::snprintf(name, sizeof(name), "step_%04d_agent%d", step, agent);
  WriteFile(dir / (std::string(name) + ".png"), png);
  if (text) {
    char* raw = nullptr;
    Check(vsarena_env_observe_text(env.get(), agent, &raw), "observe");
    WriteFile(dir / (std::string(name) + ".txt"), Take(raw) + "\n");
  }
}

int RunRender(const Options& options, const RenderFlags& flags) {
  std::string env_name = flags.env;
  json params = json::object();
  uint64_t seed = options.seed;
  std::vector<std::vector<std::string>> recorded;
  if (!flags.trajectory.empty()) {
    // Header line carries env, params and seed; the rest are steps.
    std::istringstream in(ReadFile(flags.trajectory));
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const json record = json::parse(line);
      if (header) {
        if (record.value("record", "") != "header") break;
        env_name = record["spec"]["name"].get<std::string>();
        params = record.value("params", json::object());
        seed = record["seed"].get<uint64_t>();
        header = false;
      } else if (record.value("record", "") == "header") {
        break;  // Only the first episode of a multi-episode file.
      } else if (record.value("record", "") == "step") {
        recorded.push_back(record["actions"].get<std::vector<std::string>>());
      }
    }
    if (header) {
      throw ApiFailure{VSARENA_ERR_CONFIG, flags.trajectory + ": no trajectory header"};
    }
  }
  if (env_name.empty()) throw ApiFailure{VSARENA_ERR_CONFIG, "render: give --env or --trajectory"};

  EnvHandle env(env_name, params);
  char* spec_raw = nullptr;
  Check(vsarena_env_spec(env.get(), &spec_raw), "spec");
  const json spec = json::parse(Take(spec_raw));
  const int num_agents = spec["num_agents"].get<int>();
  std::vector<std::unique_ptr<PolicyHandle>> policies;
  if (recorded.empty()) {
    auto specs = SplitAgents(flags.agents);
    if (specs.size() == 1) specs.resize(num_agents, specs[0]);
    if (static_cast<int>(specs.size()) != num_agents) {
      throw ApiFailure{VSARENA_ERR_CONFIG, "render: " + spec["name"].get<std::string>() +
                                               " needs " + std::to_string(num_agents) + " agents"};
    }
    for (int a = 0; a < num_agents; ++a) {
      policies.push_back(std::make_unique<PolicyHandle>(specs[a], env_name, flags.remote.ToJson(),
                                                        seed + 1000003ULL * (a + 1)));
    }
  }
  std::vector<int> views = flags.views;
  if (views.empty()) {
    for (int a = 0; a < num_agents; ++a) views.push_back(a);
  }
  const fs::path dir = fs::path(options.out) / "render" / spec["name"].get<std::string>();
  Check(vsarena_env_reset(env.get(), seed), "reset");
  int step = 0;
  int terminal = 0;
  while (true) {
    for (int v : views) DumpFrame(dir, env, step, v, flags.text);
    Check(vsarena_env_is_terminal(env.get(), &terminal), "terminal");
    if (terminal || (flags.max_steps > 0 && step >= flags.max_steps)) break;
    std::vector<std::string> joint;
    if (!recorded.empty()) {
      if (step >= static_cast<int>(recorded.size())) break;
      joint = recorded[step];
    } else {
      for (int a = 0; a < num_agents; ++a) {
        char* token = nullptr;
        Check(vsarena_policy_act(policies[a]->get(), env.get(), a, &token), "act");
        joint.push_back(Take(token));
      }
    }
    std::vector<const char*> raw;
    for (const auto& t : joint) raw.push_back(t.c_str());
    char* result = nullptr;
    Check(vsarena_env_step(env.get(), raw.data(), raw.size(), &result),
          "step " + std::to_string(step));
    vsarena_free(result);
    ++step;
  }
  std::cout << "wrote " << (step + 1) * views.size() << " frames to " << dir.string() << "\n";
  return kExitOk;
}

// ---- verify ----

struct VerifyFlags {
  int episodes = 1000;
  bool quick = false;
};

int RunVerify(const Options& options, const VerifyFlags& flags) {
  json request = {{"seed", options.seed}, {"episodes", flags.episodes}, {"quick", flags.quick}};
  int failures = 0;
  char* raw = nullptr;
  Check(vsarena_verify(
            request.dump().c_str(),
            [](const char* record, void*) {
              const json r = json::parse(record);
              std::cout << (r["passed"].get<bool>() ? "PASS " : "FAIL ")
                        << r["module"].get<std::string>() << " / "
                        << r["invariant"].get<std::string>() << " (seed " << r["seed"] << ", "
                        << Format("%.2f", r["seconds"].get<double>()) << " s)";
              const auto detail = r["detail"].get<std::string>();
              if (!detail.empty()) std::cout << ": " << detail;
              std::cout << std::endl;
            },
            nullptr, &failures, &raw),
        "verify");
  const json all = json::parse(Take(raw));
  WriteFile(fs::path(options.out) / "verify" / "report.json", all.dump(2) + "\n");
  std::cout << all["results"].size() << " checks, " << failures << " failed\n";
  return failures == 0 ? kExitOk : kExitVerify;
}

int RunList() {
  char* raw = nullptr;
  Check(vsarena_catalog(&raw), "catalog");
  const json catalog = json::parse(Take(raw));
  std::cout << "environments:";
  for (const auto& e : catalog["environments"]) std::cout << " " << e.get<std::string>();
  std::cout << "\nagent kinds:";
  for (const auto& a : catalog["agents"]) std::cout << " " << a.get<std::string>();
  std::cout << "\noracles:\n";
  for (const auto& [env, spec] : catalog["oracles"].items()) {
    std::cout << "  " << env << ": " << spec.get<std::string>() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-agent game arena: play, evaluate, build reasoning datasets, verify."};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML config file; command-line flags override it");
  app.set_version_flag("--version", std::string(vsarena_version()));

  Options options;
  app.add_option("--out", options.out, "Output directory")->capture_default_str();
  app.add_option("--seed", options.seed, "Base seed")->capture_default_str();
  app.add_option("--log-level", options.log_level, "Library log level")
      ->check(CLI::IsMember({"trace", "debug", "info", "warn", "error", "off"}))
      ->capture_default_str();

  PlayFlags play;
  auto* play_cmd = app.add_subcommand("play", "Play games between agents");
  play_cmd->add_option("--env", play.env, "Environment")->required();
  play_cmd->add_option("--agents", play.agents, "Comma-separated agent specs, one per seat")
      ->required();
  play_cmd->add_option("--games", play.games, "Number of games")->capture_default_str();
  play_cmd->add_option("--max-steps", play.max_steps, "Step cap per game (0: none)");
  play_cmd->add_flag("--observations", play.observations, "Record text observations");
  play.remote.Add(play_cmd);

  EvalFlags eval;
  auto* eval_cmd = app.add_subcommand("eval", "Run the evaluation protocol for one agent");
  eval_cmd->add_option("--env", eval.envs, "Environment(s), or 'all'")->required();
  eval_cmd->add_option("--agent", eval.agent, "Agent spec under test")->required();
  eval_cmd->add_option("--opponent", eval.opponent, "Override the protocol's fixed opponent");
  eval_cmd->add_option("--episodes", eval.episodes, "Override the protocol's episode count");
  eval_cmd->add_option("--workers", eval.workers, "Parallel episodes")->capture_default_str();
  eval_cmd->add_flag("--json", eval.json_output, "Print the JSON report");
  eval.remote.Add(eval_cmd);

  DatasetFlags data;
  auto* dataset_cmd = app.add_subcommand("dataset", "Build and score reasoning datasets");
  dataset_cmd->require_subcommand(1);
  auto* gen_cmd = dataset_cmd->add_subcommand("gen", "Generate a 400-sample dataset");
  gen_cmd->add_option("--env", data.env, "Environment");
  gen_cmd->add_option("--recipe", data.recipe, "Recipe JSON file")->check(CLI::ExistingFile);
  gen_cmd->add_option("--dataset", data.dataset, "Output directory (default <out>/dataset/<env>)");
  auto* score_cmd = dataset_cmd->add_subcommand("score", "Score a predictions file");
  score_cmd->add_option("--env", data.env, "Environment (locates <out>/dataset/<env>)");
  score_cmd->add_option("--dataset", data.dataset, "Dataset directory")->check(CLI::ExistingDirectory);
  score_cmd->add_option("--pred", data.predictions, "Predictions file")->check(CLI::ExistingFile);
  score_cmd->add_option("--random", data.random_reps, "Also report a random predictor over N draws");

  RenderFlags render;
  auto* render_cmd = app.add_subcommand("render", "Dump per-step frames of one episode");
  render_cmd->add_option("--env", render.env, "Environment");
  render_cmd->add_option("--agents", render.agents, "Agent specs")->capture_default_str();
  render_cmd->add_option("--trajectory", render.trajectory, "Replay a JSONL trajectory instead")
      ->check(CLI::ExistingFile);
  render_cmd->add_option("--view", render.views, "Agent views to dump (default all)");
  render_cmd->add_option("--max-steps", render.max_steps, "Stop after this many steps");
  render_cmd->add_flag("!--no-text", render.text, "Skip the text observation files");
  render.remote.Add(render_cmd);

  VerifyFlags verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite");
  verify_cmd->add_option("--episodes", verify.episodes, "Random episodes per check")
      ->capture_default_str();
  verify_cmd->add_flag("--quick", verify.quick, "Reduced counts");

  auto* list_cmd = app.add_subcommand("list", "List environments and agent kinds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    Check(vsarena_set_log_level(options.log_level.c_str()), "log level");
    if (*play_cmd) return RunPlay(options, play);
    if (*eval_cmd) return RunEval(options, eval);
    if (*gen_cmd) return RunDatasetGen(options, data);
    if (*score_cmd) return RunDatasetScore(options, data);
    if (*render_cmd) return RunRender(options, render);
    if (*verify_cmd) return RunVerify(options, verify);
    if (*list_cmd) return RunList();
  } catch (const ApiFailure& f) {
    std::cerr << "error: " << f.message << "\n";
    return ExitCodeFor(f.status);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}
