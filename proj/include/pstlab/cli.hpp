// Copyright 2026 The pstlab Authors
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

#pragma once

#include <ostream>
#include <string_view>

namespace pstlab::cli {

/// Exit codes returned by run().
enum ExitCode : int { kOk = 0, kFalse = 1, kInputError = 2, kNumericError = 3 };

/// Runs one command line (argv[0] is the program name). Results go to out,
/// diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Evaluates a numeric argument such as "pi/sqrt(2)" or "sqrt(15)*pi/2".
/// Accepts decimals, pi, sqrt(), parentheses, unary minus and + - * /.
double parseNumber(std::string_view text);

}  // namespace pstlab::cli
