// Copyright 2026 The simroot Authors
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

#ifndef SIMROOT_TOOLS_CLI_HPP
#define SIMROOT_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace simroot::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kInvalidElement = 2,
  kNotARoot = 3,
  kCapExceeded = 4,
  kMismatch = 5,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simroot::cli

#endif  // SIMROOT_TOOLS_CLI_HPP
