// Copyright 2026 The qmlstt Authors
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

#include <chrono>
#include <string>
#include <string_view>

namespace qml {

struct SzsResult {
  enum class Status { Theorem, CounterSatisfiable, Satisfiable, Unknown, Timeout, GaveUp };

  Status status = Status::Unknown;
  double wall_seconds = 0.0;
  std::string excerpt;  // the SZS line, or the head of the output when there is none
  int exit_code = -1;
};

std::string_view szs_name(SzsResult::Status s);

// Status from the first line containing "SZS status". Unrecognised statuses
// and output without such a line give Unknown.
SzsResult parse_szs(std::string_view output);

// Substitutes {file} in the template (appending the path when the
// placeholder is absent), runs it through /bin/sh and kills the process group
// once the timeout expires. Throws Error when the command cannot be started or
// the shell reports a missing binary.
SzsResult run_prover(const std::string& command_template, const std::string& file,
                     std::chrono::milliseconds timeout);

}  // namespace qml
