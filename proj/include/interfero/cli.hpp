// Copyright 2026 The Interfero Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.
//
//   interfero theory  --kind K --points N [--angle-min A --angle-max B]
//   interfero run     --config FILE [--out DIR] [--seed S] [--threads T]
//                     [--format csv|text|svg|all]
//   interfero analyze DIR...
//   interfero report  --out DIR RUN_DIR...
//
// Exit codes: 0 success, 1 bad arguments or invalid input, 2 I/O failure.

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace interfero {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitIo = 2;

inline constexpr const char* kSeedEnv = "INTERFERO_SEED";

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// --seed, then master_seed from the config file, then INTERFERO_SEED, then 1.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag,
                           std::optional<std::uint64_t> config_seed,
                           const char* env_value);

/// Label made safe for a file name; anything outside [A-Za-z0-9._-] becomes '_'.
std::string file_safe(const std::string& label);

}  // namespace interfero
