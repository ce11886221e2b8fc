/*
 * Copyright 2026 The plausikit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PLAUSIKIT_CLI_HPP
#define PLAUSIKIT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "plausikit/formula.hpp"

namespace plausikit {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitTrue = 0,
  kExitFalse = 1,
  kExitInput = 2,
  kExitResource = 3,
};

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The static fragment that formulas of `fragment` reduce into: announcement
/// and upgrade are dropped, and K is added when upgrades meet a belief
/// operator (their reduction axioms mention K).
Fragment reducedFragment(Fragment fragment);

}  // namespace plausikit

#endif  // PLAUSIKIT_CLI_HPP
