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

#include "vsarena/core/error.h"

namespace vsarena {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kUnknownEnvironment: return "unknown_environment";
    case ErrorCode::kIllegalAction: return "illegal_action";
    case ErrorCode::kTerminalState: return "terminal_state";
    case ErrorCode::kConfig: return "config";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kRemote: return "remote";
    case ErrorCode::kPolicy: return "policy";
    case ErrorCode::kVerify: return "verify";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

namespace {
std::string IllegalMessage(int agent, const std::string& token,
                           const std::vector<std::string>& legal) {
  std::string msg = "illegal action '" + token + "' for agent " +
                    std::to_string(agent) + "; legal: [";
  for (size_t i = 0; i < legal.size(); ++i) {
    if (i) msg += ", ";
    msg += legal[i];
  }
  return msg + "]";
}
}  // namespace

IllegalActionError::IllegalActionError(int agent, std::string token,
                                       std::vector<std::string> legal)
    : Error(ErrorCode::kIllegalAction, IllegalMessage(agent, token, legal)),
      agent_(agent),
      token_(std::move(token)),
      legal_(std::move(legal)) {}

}  // namespace vsarena
