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

#ifndef VSARENA_AGENTS_FACTORY_H_
#define VSARENA_AGENTS_FACTORY_H_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "vsarena/agents/remote.h"
#include "vsarena/core/policy.h"

namespace vsarena::agents {

// "minimax:depth=5" parses to {kind "minimax", params {depth: "5"}}.
struct AgentSpec {
  std::string kind;
  std::map<std::string, std::string> params;

  std::string ToString() const;
};

AgentSpec ParseAgentSpec(const std::string& text);

// Comma-separated list. A piece without ':' that contains '=' continues the
// previous agent's parameters, so "mcts:c=2,sims=50,random" is two agents.
std::vector<AgentSpec> ParseAgentList(const std::string& text);

// Kinds accepted by MakePolicy, for help output.
std::vector<std::string> AgentKinds();

// Builds a policy for `env` (canonical name). "oracle" resolves to the
// environment's reference opponent. Any kind accepts eps=<p> to mix in
// uniform random actions. `remote` supplies defaults for kind "remote".
std::unique_ptr<Policy> MakePolicy(const AgentSpec& spec, const std::string& env,
                                   const RemoteConfig& remote = {});

// Spec string of the oracle used for `env`.
std::string OracleSpec(const std::string& env);

}  // namespace vsarena::agents

#endif  // VSARENA_AGENTS_FACTORY_H_
