// Copyright 2026 The cfspectrum Authors
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

#ifndef CFSPECTRUM_CLI_HPP_
#define CFSPECTRUM_CLI_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cfs {

// Exit codes of the command-line front-end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 2;
inline constexpr int kExitResourceError = 3;
inline constexpr int kExitDiagnosticFailure = 4;
inline constexpr int kExitUsage = 64;

struct RunConfig {
  std::string subcommand;
  // Raw option values; flags win over config-file entries.
  std::map<std::string, std::string> options;

  std::string format = "json";  // json | csv
  std::string out_path;         // empty = stdout
  unsigned long seed = 20260809;
  long precision_bits = 192;
};

// Dispatches a parsed config to the library and writes the artifact.
// Returns a process exit status.
int run(const RunConfig& config);

// argv -> RunConfig -> run. Parse failures return kExitUsage.
int run_cli(int argc, const char* const* argv);

// Operation -> subcommand map; every public library operation appears
// exactly once. Exposed for the dispatch coverage test.
const std::map<std::string, std::string>& dispatch_table();

}  // namespace cfs

#endif  // CFSPECTRUM_CLI_HPP_
