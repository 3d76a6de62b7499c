/* Copyright 2026 The FashionTag Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef FASHIONTAG_CLI_H_
#define FASHIONTAG_CLI_H_

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "fashiontag/gateway.h"
#include "fashiontag/transport.h"

namespace fashiontag {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitData = 2,
  kExitBackend = 3,
};

// Injection points for tests; defaults talk to the network and really
// sleep.
struct CliEnvironment {
  std::shared_ptr<Transport> transport;
  Sleeper sleeper;
};

// Runs one invocation. `args` excludes the program name. Machine-readable
// output goes to `out`; diagnostics go to `err` as one JSON object per
// line.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
           const CliEnvironment& env = {});

}  // namespace fashiontag

#endif  // FASHIONTAG_CLI_H_
