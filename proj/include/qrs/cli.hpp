// Copyright 2026 The qrstates Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QRS_CLI_HPP
#define QRS_CLI_HPP

#include <ostream>
#include <span>
#include <string>

namespace qrs::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitBackend = 3,
};

// Runs one command line (without the program name). Subcommands: gen, verify,
// bench, entropy-info. Never throws; failures map onto the exit codes above.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qrs::cli

#endif  // QRS_CLI_HPP
