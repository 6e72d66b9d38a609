// Copyright 2026 The defall Authors.
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

#ifndef DEFALL_TOOLS_CLI_H_
#define DEFALL_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace defall::cli {

enum ExitCode {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kInputFormat = 3,
  kCapExceeded = 4,
};

// Runs one command. `args` excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace defall::cli

#endif  // DEFALL_TOOLS_CLI_H_
