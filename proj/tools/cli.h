// Copyright 2026 The Cavepoly Authors
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

#ifndef CAVEPOLY_TOOLS_CLI_H_
#define CAVEPOLY_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace cavepoly::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInputError = 2;

// Runs one subcommand. `args` excludes the program name. Instances are read
// from the file named by the positional argument, or from `in` when it is
// absent or "-".
int RunCommand(const std::vector<std::string>& args, std::istream& in,
               std::ostream& out, std::ostream& err);

}  // namespace cavepoly::cli

#endif  // CAVEPOLY_TOOLS_CLI_H_
