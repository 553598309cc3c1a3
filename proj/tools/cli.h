// Copyright 2026 The tsms Authors
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

#ifndef TSMS_TOOLS_CLI_H_
#define TSMS_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace tsms::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageOrParse = 2,
  kIncomplete = 3,
  kNotAWinner = 4,
  kBudgetExhausted = 5,
  kNotNecessary = 6,
  kNotMinimal = 7,
  kNotSubTournament = 8,
  kGuardExceeded = 9,
};

inline constexpr const char* kSchemaVersion = "1.0";

// Runs one command line (without the program name) and returns its exit
// code. Everything is written to `out` and `err`; nothing touches the
// process's standard streams.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace tsms::cli

#endif  // TSMS_TOOLS_CLI_H_
