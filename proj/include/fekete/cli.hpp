// Copyright 2026 The fekete Authors
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

#ifndef FEKETE_CLI_HPP
#define FEKETE_CLI_HPP

#include <iosfwd>

namespace fekete {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 2,
  kExitNotFound = 3,
  kExitVerificationFailure = 4,
};

/// Entry point of the fekete command line tool; returns the process exit
/// code. Output that would go to --out is written there instead of out.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fekete

#endif  // FEKETE_CLI_HPP
