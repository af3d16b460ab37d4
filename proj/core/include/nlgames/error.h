// Copyright 2026 The nlgames Authors
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

#ifndef NLGAMES_ERROR_H_
#define NLGAMES_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace nlgames {

enum class ErrorCode {
  kIo,
  kParse,
  kShape,
  kNormalization,
  kDimension,
  kParam,
  kNotHermitian,
  kBudget,
  kNotClassicalQuantum,
  kSupport,
  kMismatch,
};

// Stable short identifier, e.g. "E_IO". These strings are part of the CLI
// contract and appear on stderr.
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nlgames

#endif  // NLGAMES_ERROR_H_
