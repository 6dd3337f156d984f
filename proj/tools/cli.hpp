// Copyright 2026 The MGPD Simulator Authors
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

#ifndef MGPD_TOOLS_CLI_HPP
#define MGPD_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mgpd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCheckFailed = 2;

/// Runs the command line `args` (without the program name). Machine-readable
/// results go to `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Replaces every "--config FILE" pair with the flat JSON object in FILE,
/// rendered as "--key value" tokens ("--key" alone for true, nothing for
/// false). Options given later on the command line override the file.
std::vector<std::string> expand_config(const std::vector<std::string> &args);

}  // namespace mgpd::cli

#endif  // MGPD_TOOLS_CLI_HPP
