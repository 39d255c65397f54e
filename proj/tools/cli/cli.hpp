// Copyright 2026 The evtlab Authors.
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

#ifndef EVTLAB_TOOLS_CLI_CLI_HPP_
#define EVTLAB_TOOLS_CLI_CLI_HPP_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace evt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitVerdict = 3;  // the mathematics said no
inline constexpr int kExitOutput = 4;

/// Used when neither --seed nor the environment supplies one.
inline constexpr std::uint64_t kDefaultSeed = 20260101;
inline constexpr const char* kSeedEnvVar = "EVTLAB_SEED";

/// Runs one subcommand. `args` excludes the program name. The report goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace evt::cli

#endif  // EVTLAB_TOOLS_CLI_CLI_HPP_
