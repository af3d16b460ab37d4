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

#include "nlgames/error.h"

namespace nlgames {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo:
      return "E_IO";
    case ErrorCode::kParse:
      return "E_PARSE";
    case ErrorCode::kShape:
      return "E_SHAPE";
    case ErrorCode::kNormalization:
      return "E_NORM";
    case ErrorCode::kDimension:
      return "E_DIM";
    case ErrorCode::kParam:
      return "E_PARAM";
    case ErrorCode::kNotHermitian:
      return "E_HERMITIAN";
    case ErrorCode::kBudget:
      return "E_BUDGET";
    case ErrorCode::kNotClassicalQuantum:
      return "E_CQ";
    case ErrorCode::kSupport:
      return "E_SUPPORT";
    case ErrorCode::kMismatch:
      return "E_MISMATCH";
  }
  return "E_UNKNOWN";
}

}  // namespace nlgames
