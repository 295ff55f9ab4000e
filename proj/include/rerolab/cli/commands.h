//
// Copyright 2026 The Rerolab Authors
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
//

#ifndef REROLAB_CLI_COMMANDS_H_
#define REROLAB_CLI_COMMANDS_H_

#include <ostream>

namespace rerolab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the rerolab tool. argv[0] is the program name. Returns the
// process exit code: 0 on success, 1 when an audit, separation prong or
// taxonomy validation fails, 2 on usage, config or evaluation errors.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace rerolab

#endif  // REROLAB_CLI_COMMANDS_H_
