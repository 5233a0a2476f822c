// Copyright 2026 The Starlift Authors
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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace starlift::cli {

enum ExitCode : int { kPass = 0, kFailure = 1, kInputError = 2 };

/// Runs one `starlift <subcommand> ...` invocation. The report goes to
/// `out` (or --output), diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

/// Tolerance from STARLIFT_TOL, or 1e-9. Throws InputError if unparsable or
/// not positive.
double default_tolerance();

}  // namespace starlift::cli
