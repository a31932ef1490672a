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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cuttree/errors.hpp"
#include "cuttree/flow.hpp"
#include "cuttree/generators.hpp"
#include "cuttree/json_io.hpp"
#include "cuttree/kec.hpp"
#include "cuttree/mgraph_io.hpp"
#include "cuttree/ntmc_tree.hpp"
#include "cuttree/oracle.hpp"
#include "cuttree/pendant_tree.hpp"
#include "cuttree/vertex_connectivity.hpp"

namespace cuttree::cli {

namespace {

struct Options {
  std::string input;
  std::string out;
  std::string format = "mgraph";
  std::uint64_t seed = 1;
  std::size_t oracle_limit = oracle::kDefaultPairLimit;
  bool oracle_limit_set = false;
  bool use_oracle = false;
  std::optional<Weight> k;
  std::string mode;
  std::string what;
  std::vector<std::string> gen_args;
};

// Graph plus whatever a previous command attached to it.
struct Loaded {
  Multigraph graph;
  Json report;  // null for plain graph input
};

std::string slurp(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Loaded load_input(const Options& opt, std::istream& in) {
  std::string text;
  if (opt.input.empty() || opt.input == "-") {
    text = slurp(in);
  } else {
    std::ifstream file(opt.input);
    if (!file) throw InputError("cannot open '" + opt.input + "'");
    text = slurp(file);
  }
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw FormatError("empty input");
  if (text[first] != '{') return Loaded{parse_mgraph(text), nullptr};

  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (j.contains("graph")) {
    if (j.contains("schema") && j["schema"] != kJsonSchema) {
      throw FormatError("unsupported report schema " + j["schema"].dump());
    }
    return Loaded{graph_from_json(j["graph"]), j};
  }
  return Loaded{graph_from_json(j), nullptr};
}

void write_output(const Options& opt, std::ostream& out, const std::string& text) {
  if (opt.out.empty() || opt.out == "-") {
    out << text;
    out.flush();
    return;
  }
  const std::filesystem::path target(opt.out);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::trunc);
    if (!file) throw InputError("cannot write '" + opt.out + "'");
    file << text;
    if (!file.flush()) throw InputError("cannot write '" + opt.out + "'");
  }
  std::filesystem::rename(tmp, target);
}

class Reporter {
 public:
  Reporter(std::string command, const Multigraph& g)
      : start_(std::chrono::steady_clock::now()) {
    doc_["schema"] = kJsonSchema;
    doc_["command"] = std::move(command);
    doc_["input"] = graph_digest(g);
    doc_["graph"] = graph_to_json(g);
  }

  Json& result() { return doc_["result"]; }

  std::string finish() {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    doc_["timing_ms"] =
        std::chrono::duration<double, std::milli>(elapsed).count();
    return doc_.dump(2) + "\n";
  }

 private:
  std::chrono::steady_clock::time_point start_;
  Json doc_;
};

Json stats_to_json(const BuildStats& s) {
  return Json{{"flow_calls", s.flow_calls}, {"splits", s.splits}, {"contractions", s.contractions}};
}

Json hypothesis_to_json(const Hypothesis& h) {
  return Json{{"simple", h.simple}, {"delta", h.delta}, {"lambda", h.lambda},
              {"kappa", h.kappa},   {"holds", h.holds()}};
}

Multigraph generate(const Options& opt) {
  if (opt.gen_args.empty()) throw InputError("gen needs a family name");
  const std::string& family = opt.gen_args.front();
  std::vector<std::size_t> p;
  for (std::size_t i = 1; i < opt.gen_args.size(); ++i) {
    const std::string& s = opt.gen_args[i];
    if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit)) {
      throw InputError("generator parameter '" + s + "' is not a non-negative integer");
    }
    p.push_back(std::stoull(s));
  }
  auto need = [&](std::size_t count, const char* usage) {
    if (p.size() != count) throw InputError(std::string("usage: gen ") + usage);
  };
  if (family == "clique-cycle") {
    need(2, "clique-cycle <delta> <k>");
    return gen::clique_cycle(p[0], p[1]);
  }
  if (family == "multi-cycle-clique") {
    need(3, "multi-cycle-clique <delta> <lambda> <k>");
    return gen::multi_cycle_clique(p[0], p[1], p[2]);
  }
  if (family == "disjoint-cliques") {
    need(2, "disjoint-cliques <delta> <k>");
    return gen::disjoint_cliques(p[0], p[1]);
  }
  if (family == "multiplicity-path") {
    need(2, "multiplicity-path <delta> <n>");
    return gen::multiplicity_path(p[0], p[1]);
  }
  if (family == "bone") {
    need(1, "bone <length>");
    return gen::bone_family(p[0]);
  }
  if (family == "random") {
    need(2, "random <n> <p_per_mille> [--seed S]");
    if (p[1] > 1000) throw InputError("p_per_mille must be at most 1000");
    return gen::random_graph(p[0], static_cast<std::uint32_t>(p[1]), opt.seed);
  }
  throw InputError("unknown family '" + family + "'");
}

std::string format_graph(const Options& opt, const Multigraph& g) {
  if (opt.format == "json") return graph_to_json(g).dump() + "\n";
  return format_mgraph(g);
}

// Tree attached to a previous report, if any.
std::optional<std::pair<BlockTree, TreeKind>> attached_tree(const Loaded& in) {
  if (in.report.is_null() || !in.report.contains("result")) return std::nullopt;
  const Json& r = in.report["result"];
  if (!r.is_object() || !r.contains("tree")) return std::nullopt;
  return tree_from_json(r["tree"], in.graph);
}

Weight attached_k(const Loaded& in, const Multigraph& g) {
  if (!in.report.is_null() && in.report.contains("result") && in.report["result"].contains("k")) {
    return in.report["result"]["k"].get<Weight>();
  }
  return min_degree(g);
}

ValidationOptions validation_options(const Options& opt) {
  ValidationOptions v;
  v.use_oracle = opt.use_oracle;
  v.oracle_limit = opt.oracle_limit;
  return v;
}

void require_oracle_scale(const Options& opt, const Multigraph& g) {
  if (g.n() > opt.oracle_limit) {
    throw SizeRefusal("graph has " + std::to_string(g.n()) +
                      " vertices, above the oracle limit " + std::to_string(opt.oracle_limit) +
                      " (raise it with --oracle-limit)");
  }
}

int cmd_info(const Options& opt, std::istream& in, std::ostream& out) {
  const auto loaded = load_input(opt, in);
  const auto& g = loaded.graph;
  Reporter rep("info", g);
  Json r;
  if (g.n() > 0) r["hypothesis"] = hypothesis_to_json(evaluate_hypothesis(g));
  Json degrees = Json::array();
  for (VertexId v = 0; v < g.n(); ++v) degrees.push_back(g.degree(v));
  r["degrees"] = std::move(degrees);
  rep.result() = std::move(r);
  write_output(opt, out, rep.finish());
  return kOk;
}

int cmd_pendant_tree(const Options& opt, std::istream& in, std::ostream& out) {
  const auto loaded = load_input(opt, in);
  const auto& g = loaded.graph;
  const auto build = build_pendant_tree_with_stats(g);
  Reporter rep("pendant-tree", g);
  rep.result() = Json{{"tree", tree_to_json(build.tree, TreeKind::kPendant)},
                      {"stats", stats_to_json(build.stats)}};
  write_output(opt, out, rep.finish());
  return kOk;
}

int cmd_ntmc_tree(const Options& opt, std::istream& in, std::ostream& out) {
  const auto loaded = load_input(opt, in);
  const auto& g = loaded.graph;
  const auto build = build_ntmc_tree_with_stats(g);
  Reporter rep("ntmc-tree", g);
  rep.result() = Json{{"tree", tree_to_json(build.tree, TreeKind::kNtmc)},
                      {"lambda", build.lambda},
                      {"stats", stats_to_json(build.stats)}};
  write_output(opt, out, rep.finish());
  return kOk;
}

int cmd_kec_tree(const Options& opt, std::istream& in, std::ostream& out) {
  const auto loaded = load_input(opt, in);
  const auto& g = loaded.graph;
  if (g.n() == 0) throw InputError("empty graph");
  const Weight k = opt.k ? *opt.k : min_degree(g);
  if (k < 1) throw InputError("k must be at least 1");
  const auto build = build_kec_tree_with_stats(g, k);
  Reporter rep("kec-tree", g);
  rep.result() = Json{{"tree", tree_to_json(build.tree, TreeKind::kKec)},
                      {"k", k},
                      {"stats", stats_to_json(build.stats)}};
  write_output(opt, out, rep.finish());
  return kOk;
}

int cmd_sparsify(const Options& opt, std::istream& in, std::ostream& out) {
  const auto loaded = load_input(opt, in);
  const auto& g = loaded.graph;
  if (g.n() == 0) throw InputError("empty graph");
  const SparsifyMode mode = sparsify_mode_from_string(opt.mode);
  BlockTree tree;
  if (auto attached = attached_tree(loaded)) {
    const TreeKind kind = attached->second;
    if (mode == SparsifyMode::kNtmc && kind != TreeKind::kNtmc) {
      throw ContractViolation("mode ntmc needs an ntmc tree, got a " + to_string(kind) + " tree");
    }
    if (mode == SparsifyMode::kBelowDelta) {
      if (kind != TreeKind::kKec || attached_k(loaded, g) != min_degree(g)) {
        throw ContractViolation("mode below-delta needs a kec tree with k = delta");
      }
    }
    tree = std::move(attached->first);
  } else {
    tree = mode == SparsifyMode::kNtmc ? build_ntmc_tree(g) : build_kec_tree(g, min_degree(g));
  }
  const auto report = sparsify(g, tree, mode, opt.oracle_limit);
  Reporter rep("sparsify", g);
  rep.result() = sparsify_to_json(report);
  write_output(opt, out, rep.finish());
  return report.ok() ? kOk : kVerificationFailed;
}

int cmd_count(const Options& opt, std::istream& in, std::ostream& out) {
  const auto loaded = load_input(opt, in);
  const auto& g = loaded.graph;
  Reporter rep("count " + opt.what, g);
  Json r;
  if (opt.what == "pendant") {
    if (g.n() == 0) throw InputError("empty graph");
    const auto bounds = check_pendant_theorems(g);
    r["lower_bound"] = bounds.pairs.lower_bound;
    r["exact"] = bounds.pairs.exact;
    r["blocks"] = bounds.blocks;
    r["hypothesis"] = hypothesis_to_json(bounds.hypothesis);
    r["applicable"] = bounds.applicable();
    r["block_bound_holds"] = bounds.block_bound_holds;
    r["pair_bound_holds"] = bounds.pair_bound_holds;
  } else if (opt.what == "ntmc") {
    const std::size_t limit = opt.oracle_limit_set ? opt.oracle_limit : oracle::kDefaultLimit;
    r["count"] = count_nontrivial_mincuts(g, limit);
  } else if (opt.what == "kec") {
    if (g.n() == 0) throw InputError("empty graph");
    const Weight k = opt.k ? *opt.k : min_degree(g);
    if (k < 1) throw InputError("k must be at least 1 (minimum degree is 0; pass --k)");
    r["k"] = k;
    r["components"] = kec_components(g, k).size();
    if (!opt.k && k > 0) {
      const auto cc = check_component_count(g);
      r["ratio"] = cc.ratio;
      r["applicable"] = cc.applicable();
      r["bound_holds"] = cc.bound_holds;
    }
  } else {
    throw InputError("count expects pendant, ntmc or kec");
  }
  r["what"] = opt.what;
  rep.result() = std::move(r);
  write_output(opt, out, rep.finish());
  return kOk;
}

// Cross-checks a stored count against the oracle.
void verify_count(const Options& opt, const Loaded& loaded, Json& r) {
  const auto& g = loaded.graph;
  const Json& stored = loaded.report["result"];
  const std::string what = stored.value("what", "");
  require_oracle_scale(opt, g);
  std::vector<std::string> failures;
  if (what == "pendant") {
    const auto brute = oracle::brute_pendant_pairs(g, opt.oracle_limit).size();
    if (stored["exact"].get<std::size_t>() != brute) failures.push_back("exact pendant pair count");
    if (stored["lower_bound"].get<std::size_t>() > brute) failures.push_back("lower bound exceeds");
    r["oracle"] = brute;
  } else if (what == "ntmc") {
    const auto brute = oracle::enumerate_cuts(g, opt.oracle_limit).nontrivial_min_cuts.size();
    if (stored["count"].get<std::size_t>() != brute) failures.push_back("non-trivial min-cut count");
    r["oracle"] = brute;
  } else if (what == "kec") {
    const auto brute = oracle::brute_kec_components(g, stored["k"].get<Weight>(), opt.oracle_limit);
    if (stored["components"].get<std::size_t>() != brute.size()) failures.push_back("component count");
    r["oracle"] = brute.size();
  } else {
    throw FormatError("report holds no tree or count to verify");
  }
  r["ok"] = failures.empty();
  r["failures"] = failures;
}

ValidationReport validate_tree(const Options& opt, const Loaded& loaded, const BlockTree& t,
                               TreeKind kind) {
  const auto v = validation_options(opt);
  switch (kind) {
    case TreeKind::kPendant:
      return validate_pendant_tree(loaded.graph, t, v);
    case TreeKind::kNtmc:
      return validate_ntmc_tree(loaded.graph, t, v);
    case TreeKind::kKec:
      return validate_kec_tree(loaded.graph, t, attached_k(loaded, loaded.graph), v);
  }
  return {};
}

int cmd_verify(const Options& opt, std::istream& in, std::ostream& out) {
  const auto loaded = load_input(opt, in);
  const auto& g = loaded.graph;
  if (opt.use_oracle) require_oracle_scale(opt, g);
  Reporter rep("verify", g);
  Json r;
  bool ok = true;
  if (auto attached = attached_tree(loaded)) {
    const auto report = validate_tree(opt, loaded, attached->first, attached->second);
    r["kind"] = to_string(attached->second);
    r["validation"] = validation_to_json(report);
    ok = report.ok();
  } else if (!loaded.report.is_null() && loaded.report.contains("result")) {
    if (!opt.use_oracle) throw InputError("verifying a count needs --oracle");
    verify_count(opt, loaded, r);
    ok = r["ok"].get<bool>();
  } else {
    if (g.n() == 0) throw InputError("empty graph");
    const auto v = validation_options(opt);
    Json checks = Json::object();
    const auto pendant = validate_pendant_tree(g, build_pendant_tree(g), v);
    checks["pendant"] = validation_to_json(pendant);
    ok = ok && pendant.ok();
    const Weight delta = min_degree(g);
    if (delta >= 1) {
      const auto kec = validate_kec_tree(g, build_kec_tree(g, delta), delta, v);
      checks["kec"] = validation_to_json(kec);
      ok = ok && kec.ok();
    }
    if (g.n() >= 2 && g.is_simple()) {
      const Weight lambda = global_edge_connectivity(g);
      if (lambda != 0 && lambda != 2) {
        const auto ntmc = validate_ntmc_tree(g, build_ntmc_tree(g), v);
        checks["ntmc"] = validation_to_json(ntmc);
        ok = ok && ntmc.ok();
      }
    }
    if (opt.use_oracle) {
      const auto exact = count_pendant_pairs(g).exact;
      const auto brute = oracle::brute_pendant_pairs(g, opt.oracle_limit).size();
      const bool same = exact == static_cast<Weight>(brute);
      checks["pendant_count"] = Json{{"ok", same}, {"exact", exact}, {"oracle", brute}};
      ok = ok && same;
    }
    r["checks"] = std::move(checks);
  }
  r["oracle"] = opt.use_oracle;
  r["ok"] = ok;
  rep.result() = std::move(r);
  write_output(opt, out, rep.finish());
  return ok ? kOk : kVerificationFailed;
}

int cmd_gomory_hu(const Options& opt, std::istream& in, std::ostream& out) {
  const auto loaded = load_input(opt, in);
  const auto& g = loaded.graph;
  if (g.n() < 2) throw InputError("gomory-hu needs at least two vertices");
  const auto tree = gomory_hu(g);
  Json edges = Json::array();
  for (const auto& e : tree.edges) edges.push_back({e.u + 1, e.v + 1, e.weight});
  Reporter rep("gomory-hu", g);
  rep.result() = Json{{"edges", std::move(edges)}};
  write_output(opt, out, rep.finish());
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Cut trees, pendant pairs and contraction-based sparsification", "cuttree"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--out,-o", opt.out, "Write the result to this file");
  app.add_option("--format", opt.format, "Graph output format")
      ->check(CLI::IsMember({"mgraph", "json"}));
  app.add_option("--seed", opt.seed, "Seed for random generators");
  auto* limit = app.add_option("--oracle-limit", opt.oracle_limit,
                               "Largest n handled by exhaustive enumeration");

  auto* gen = app.add_subcommand("gen", "Generate a graph family");
  gen->add_option("family_and_params", opt.gen_args,
                  "clique-cycle d k | multi-cycle-clique d l k | disjoint-cliques d k | "
                  "multiplicity-path d n | bone len | random n p")
      ->required();
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", opt.input, "mgraph or JSON file (default stdin)");
  };
  auto* info = app.add_subcommand("info", "Graph digest and hypothesis values");
  add_input(info);
  auto* pendant = app.add_subcommand("pendant-tree", "Build a pendant tree");
  add_input(pendant);
  auto* ntmc = app.add_subcommand("ntmc-tree", "Build a non-trivial min-cut tree");
  add_input(ntmc);
  auto* kec = app.add_subcommand("kec-tree", "Build a k-edge-connectivity tree");
  kec->add_option("--k", opt.k, "Connectivity threshold (default: minimum degree)");
  add_input(kec);
  auto* sparse = app.add_subcommand("sparsify", "Contract tree blocks and check preservation");
  sparse->add_option("--mode", opt.mode, "ntmc | below-delta")->required();
  add_input(sparse);
  auto* count = app.add_subcommand("count", "Count pendant pairs, non-trivial min cuts or components");
  count->add_option("what", opt.what, "pendant | ntmc | kec")
      ->required()
      ->check(CLI::IsMember({"pendant", "ntmc", "kec"}));
  count->add_option("--k", opt.k, "Threshold for kec (default: minimum degree)");
  add_input(count);
  auto* verify = app.add_subcommand("verify", "Validate a tree, a count, or a graph's trees");
  verify->add_flag("--oracle", opt.use_oracle, "Decide by exhaustive enumeration");
  add_input(verify);
  auto* gh = app.add_subcommand("gomory-hu", "Flow-equivalent tree");
  add_input(gh);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  opt.oracle_limit_set = limit->count() > 0;

  try {
    if (*gen) {
      write_output(opt, out, format_graph(opt, generate(opt)));
      return kOk;
    }
    if (*info) return cmd_info(opt, in, out);
    if (*pendant) return cmd_pendant_tree(opt, in, out);
    if (*ntmc) return cmd_ntmc_tree(opt, in, out);
    if (*kec) return cmd_kec_tree(opt, in, out);
    if (*sparse) return cmd_sparsify(opt, in, out);
    if (*count) return cmd_count(opt, in, out);
    if (*verify) return cmd_verify(opt, in, out);
    if (*gh) return cmd_gomory_hu(opt, in, out);
  } catch (const SizeRefusal& e) {
    err << "refused: " << e.what() << "\n";
    return kSizeRefusal;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const UnsupportedInput& e) {
    err << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const ContractViolation& e) {
    err << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}

}  // namespace cuttree::cli
