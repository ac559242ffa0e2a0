/**
 * Copyright 2026 The qtheta Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef QTHETA_CLI_HPP
#define QTHETA_CLI_HPP

#include <ostream>
#include <string_view>

#include "qtheta/error.hpp"

namespace qtheta::cli {

enum ExitCode : int {
  exit_pass = 0,
  exit_verification_failed = 1,
  exit_usage = 2,
  exit_non_converged = 3,
  exit_inconclusive = 4,
};

/// Parses "a+bi", "a-bi", "bi", "i", "-i" or a plain real. ContractError on
/// anything else.
Complex parse_complex(std::string_view text);

/// Runs one command line. Results go to `out` (or the --out file); every
/// error path writes exactly one line to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qtheta::cli

#endif  // QTHETA_CLI_HPP
