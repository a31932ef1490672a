// Copyright 2026 The cuttree Authors
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

#include <iosfwd>
#include <string>
#include <vector>

namespace cuttree::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kInputError = 2,
  kPrecondition = 3,
  kVerificationFailed = 4,
  kSizeRefusal = 5,
};

/// Runs one command line (without the program name). Results go to `out`
/// unless --out names a file; one-line diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace cuttree::cli
