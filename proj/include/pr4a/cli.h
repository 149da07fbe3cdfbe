// Copyright 2026 The pr4a Authors.
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

// Command-line front end: assign, report, simulate, crowd-eval and oracle.
// Exit codes: 0 ok, 2 unreadable input or bad flags, 3 infeasible or invalid
// instance, 4 oracle budget exceeded.

#ifndef PR4A_CLI_H_
#define PR4A_CLI_H_

#include <iosfwd>

namespace pr4a {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitBudget = 4;

inline constexpr const char* kToolVersion = "0.1.0";

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace pr4a

#endif  // PR4A_CLI_H_
