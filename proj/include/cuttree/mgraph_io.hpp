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

#include "cuttree/graph.hpp"

namespace cuttree {

/// Reads the `p mgraph <n> <lines>` text format. Vertices are 1-based in the
/// file. Comment lines start with `c`. Throws FormatError on malformed input,
/// including a repeated vertex pair or a line count that disagrees with the
/// header.
Multigraph read_mgraph(std::istream& in);
Multigraph parse_mgraph(const std::string& text);

/// Writes one `e u v mult` line per adjacent pair, pairs in lexicographic order.
void write_mgraph(std::ostream& out, const Multigraph& g);
std::string format_mgraph(const Multigraph& g);

}  // namespace cuttree
