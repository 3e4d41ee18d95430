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

#ifndef VSARENA_CORE_ERROR_H_
#define VSARENA_CORE_ERROR_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace vsarena {

enum class ErrorCode {
  kInvalidArgument,
  kUnknownEnvironment,
  kIllegalAction,
  kTerminalState,
  kConfig,
  kIo,
  kRemote,
  kPolicy,
  kVerify,
  kInternal,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised by Environment::Step; carries the legal set the action was checked
// against so callers can report or retry.
class IllegalActionError : public Error {
 public:
  IllegalActionError(int agent, std::string token, std::vector<std::string> legal);
  int agent() const { return agent_; }
  const std::string& token() const { return token_; }
  const std::vector<std::string>& legal() const { return legal_; }

 private:
  int agent_;
  std::string token_;
  std::vector<std::string> legal_;
};

}  // namespace vsarena

#endif  // VSARENA_CORE_ERROR_H_
