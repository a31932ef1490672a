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

#include "cuttree/mgraph_io.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "cuttree/errors.hpp"

namespace cuttree {

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw FormatError("mgraph line " + std::to_string(line_no) + ": " + what);
}

bool read_count(std::istringstream& fields, long long& value) {
  return static_cast<bool>(fields >> value);
}

}  // namespace

Multigraph read_mgraph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long expected_lines = 0;
  std::vector<EdgeSpec> edges;
  std::set<std::pair<VertexId, VertexId>> seen;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      if (have_header) fail(line_no, "duplicate header");
      std::string kind;
      if (!(fields >> kind) || kind != "mgraph") fail(line_no, "expected 'p mgraph <n> <m>'");
      if (!read_count(fields, n) || !read_count(fields, expected_lines) || n < 0 ||
          expected_lines < 0) {
        fail(line_no, "bad header counts");
      }
      if (n > std::numeric_limits<VertexId>::max()) fail(line_no, "vertex count too large");
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) fail(line_no, "edge before header");
      long long u = 0, v = 0, mult = 0;
      if (!read_count(fields, u) || !read_count(fields, v) || !read_count(fields, mult)) {
        fail(line_no, "expected 'e <u> <v> <mult>'");
      }
      if (u < 1 || v < 1 || u > n || v > n) fail(line_no, "vertex out of range");
      if (u == v) fail(line_no, "self-loop");
      if (mult < 1) fail(line_no, "multiplicity must be >= 1");
      auto a = static_cast<VertexId>(std::min(u, v) - 1);
      auto b = static_cast<VertexId>(std::max(u, v) - 1);
      if (!seen.emplace(a, b).second) fail(line_no, "vertex pair listed twice");
      edges.push_back({a, b, mult});
    } else {
      fail(line_no, "unknown line type '" + tag + "'");
    }
    std::string extra;
    if (fields >> extra) fail(line_no, "trailing content");
  }
  if (!have_header) throw FormatError("mgraph: missing 'p mgraph' header");
  if (static_cast<long long>(edges.size()) != expected_lines) {
    throw FormatError("mgraph: header announces " + std::to_string(expected_lines) +
                      " edge lines, found " + std::to_string(edges.size()));
  }
  return Multigraph(static_cast<std::size_t>(n), edges);
}

Multigraph parse_mgraph(const std::string& text) {
  std::istringstream in(text);
  return read_mgraph(in);
}

void write_mgraph(std::ostream& out, const Multigraph& g) {
  const auto edges = g.edges();
  out << "p mgraph " << g.n() << ' ' << edges.size() << '\n';
  for (const auto& e : edges) {
    out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.multiplicity << '\n';
  }
}

std::string format_mgraph(const Multigraph& g) {
  std::ostringstream out;
  write_mgraph(out, g);
  return out.str();
}

}  // namespace cuttree
