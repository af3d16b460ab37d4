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

#ifndef NLGAMES_TOOLS_COMMANDS_H_
#define NLGAMES_TOOLS_COMMANDS_H_

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace nlgames::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitParam = 3;

// Runs one command. The report goes to `out` as a single JSON document and
// diagnostics to `err`. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// The report without wall-clock fields.
nlohmann::json canonical_report(const nlohmann::json& report);

std::string sha256_hex(std::string_view data);

}  // namespace nlgames::cli

#endif  // NLGAMES_TOOLS_COMMANDS_H_
