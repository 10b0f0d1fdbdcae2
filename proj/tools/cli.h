// Copyright 2026 The pcscore Authors.
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

#ifndef PCSCORE_TOOLS_CLI_H_
#define PCSCORE_TOOLS_CLI_H_

#include <iosfwd>

namespace pcscore::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kDataError = 2;
inline constexpr int kStrictnessViolation = 3;

// Runs the command line. `interactive` selects the default output format
// (table on a terminal, json otherwise) when neither --format nor
// PCSCORE_FORMAT is given.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err, bool interactive);

}  // namespace pcscore::cli

#endif  // PCSCORE_TOOLS_CLI_H_
