// Copyright 2026 The greenseq Authors.
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

// greenseq: count, enumerate and verify maximal green sequences.
//
//   greenseq count     --catalog a3-linear -L 8
//   greenseq enumerate --catalog a2
//   greenseq verify    --catalog cycle3 1,2,3,1
//   greenseq export    --catalog a3-linear --graph full
//   greenseq catalog   list | emit NAME
//   greenseq serve     --port 8080
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "greenseq/catalog.hpp"
#include "greenseq/http_service.hpp"
#include "greenseq/io.hpp"
#include "greenseq/search.hpp"

namespace {

using namespace greenseq;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;
constexpr int kBudgetExceeded = 3;

struct RunConfig {
  std::string catalog_name;
  std::string input_path;
  int max_length = 0;  // 0: n(n+3)
  std::size_t budget = 20'000'000;
  int jobs = 1;
  std::size_t memory_mib = 0;  // 0: 80% of available memory
  std::string format;
  std::string output;
};

struct Loaded {
  ExchangeMatrix quiver;
  std::optional<catalog::CatalogEntry> entry;
};

Loaded load(const RunConfig& cfg) {
  if (cfg.catalog_name.empty() == cfg.input_path.empty())
    throw InputError("give exactly one of --catalog NAME or --input FILE");
  if (!cfg.catalog_name.empty()) {
    auto entry = catalog::lookup(cfg.catalog_name);
    return {catalog::make(entry.spec).matrix, entry};
  }
  ExchangeMatrix q = io::read_quiver_file(cfg.input_path);
  if (q.frozen_count() != 0) q = principal_part(q);
  return {q, std::nullopt};
}

SearchOptions options_for(const RunConfig& cfg, const ExchangeMatrix& q) {
  SearchOptions o;
  o.max_length = cfg.max_length > 0 ? cfg.max_length : default_max_length(q);
  o.node_budget = cfg.budget;
  o.jobs = cfg.jobs;
  o.memory_limit = cfg.memory_mib << 20;
  return o;
}

// Writes to --output when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InputError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void warn_if_empty(const LengthHistogram& h, const Loaded& loaded) {
  if (!h.empty()) return;
  std::cerr << "warning: no MGS found up to " << h.max_length();
  if (loaded.entry && loaded.entry->proven_empty) std::cerr << "; emptiness proven in theory";
  std::cerr << '\n';
}

int cmd_count(const RunConfig& cfg) {
  const Loaded loaded = load(cfg);
  const SearchOptions opts = options_for(cfg, loaded.quiver);
  const LengthHistogram h = count_mgs(loaded.quiver, opts);
  Output out(cfg.output);
  const std::string format = cfg.format.empty() ? "text" : cfg.format;
  if (format == "csv") {
    out.stream() << io::histogram_csv(h);
  } else if (format == "json") {
    out.stream() << io::histogram_json(h).dump(2) << '\n';
  } else if (format == "text") {
    out.stream() << io::histogram_text(h);
    out.stream() << "total: " << h.total() << '\n';
    if (h.min_length()) out.stream() << "l_min: " << *h.min_length() << '\n';
    if (h.empirical_max_length()) {
      out.stream() << "l0_max: " << *h.empirical_max_length() << " (empirical, assumes interval conjecture)\n";
      out.stream() << "interval: " << (check_interval(h) ? "yes" : "no") << '\n';
    } else if (!h.empty()) {
      out.stream() << "l0_max: not detected up to " << h.max_length() << '\n';
    }
  } else {
    throw InputError("count supports --format text|csv|json");
  }
  warn_if_empty(h, loaded);
  return kOk;
}

int cmd_enumerate(const RunConfig& cfg) {
  const Loaded loaded = load(cfg);
  const SearchDag dag = explore(loaded.quiver, options_for(cfg, loaded.quiver));
  Output out(cfg.output);
  const std::string format = cfg.format.empty() ? "lines" : cfg.format;
  if (format != "lines" && format != "json") throw InputError("enumerate supports --format lines|json");
  bool first = true;
  if (format == "json") out.stream() << "[";
  enumerate_mgs(dag, [&](const MutationSequence& s) {
    if (format == "lines") {
      out.stream() << io::sequence_line(s.vertices) << '\n';
    } else {
      nlohmann::json j{{"sequence", s.vertices}, {"terminal_perm", s.terminal_perm}};
      for (auto& v : j["sequence"]) v = v.get<int>() + 1;
      for (auto& v : j["terminal_perm"]) v = v.get<int>() + 1;
      out.stream() << (first ? "\n  " : ",\n  ") << j.dump();
    }
    first = false;
    return true;
  });
  if (format == "json") out.stream() << (first ? "]\n" : "\n]\n");
  warn_if_empty(dag.histogram(), loaded);
  return kOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& literal) {
  const Loaded loaded = load(cfg);
  const MutationSequence s = verify_sequence(loaded.quiver, io::parse_sequence(literal));
  Output out(cfg.output);
  if (s.maximal_green()) {
    out.stream() << "valid maximal green sequence of length " << s.length() << '\n';
    out.stream() << "terminal permutation: " << io::permutation_line(s.terminal_perm) << '\n';
    return kOk;
  }
  std::string reason = "final state is not all red";
  if (s.failure == MutationSequence::Failure::NotGreen) reason = "vertex is not green";
  if (s.failure == MutationSequence::Failure::BadLabel) reason = "label out of range";
  out.stream() << "invalid at step " << s.failing_step << ": " << reason << '\n';
  return kVerifyFailed;
}

int cmd_export(const RunConfig& cfg, const std::string& graph) {
  const Loaded loaded = load(cfg);
  Output out(cfg.output);
  const std::string format = cfg.format.empty() ? "dot" : cfg.format;
  if (graph == "full") {
    if (format != "dot") throw InputError("the full exchange graph is exported as dot only");
    out.stream() << io::exchange_graph_dot(full_exchange_graph(loaded.quiver, cfg.budget));
    return kOk;
  }
  const SearchDag dag = explore(loaded.quiver, options_for(cfg, loaded.quiver));
  if (format == "dot") {
    out.stream() << io::dag_dot(dag);
  } else if (format == "lines") {
    out.stream() << io::dag_edge_list(dag);
  } else if (format == "csv") {
    out.stream() << io::histogram_csv(dag.histogram());
  } else {
    throw InputError("export supports --format dot|lines|csv");
  }
  return kOk;
}

int cmd_catalog_list() {
  for (const auto& e : catalog::entries()) std::cout << e.name << '\t' << e.description << '\n';
  return kOk;
}

int cmd_catalog_emit(const std::string& name, const std::string& format, const std::string& output) {
  const IceQuiver q = catalog::make(catalog::lookup(name).spec);
  Output out(output);
  if (format.empty() || format == "text") {
    out.stream() << io::to_text(q.matrix);
  } else if (format == "json") {
    out.stream() << io::to_json(q.matrix).dump() << '\n';
  } else if (format == "dot") {
    out.stream() << io::quiver_dot(q);
  } else {
    throw InputError("catalog emit supports --format text|json|dot");
  }
  return kOk;
}

void add_run_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--catalog", cfg.catalog_name, "Catalog quiver name");
  cmd->add_option("--input", cfg.input_path, "Quiver file (text or JSON)");
  cmd->add_option("-L,--max-length", cfg.max_length, "Length bound (default n(n+3))")->check(CLI::PositiveNumber);
  cmd->add_option("--budget", cfg.budget, "Node budget")->check(CLI::PositiveNumber);
  cmd->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--memory", cfg.memory_mib, "Resident memory limit in MiB")->check(CLI::PositiveNumber);
  cmd->add_option("--format", cfg.format, "Output format");
  cmd->add_option("--output", cfg.output, "Output path");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal green sequences of quivers"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* count = app.add_subcommand("count", "Histogram of maximal green sequence lengths");
  add_run_flags(count, cfg);
  auto* enumerate = app.add_subcommand("enumerate", "List maximal green sequences");
  add_run_flags(enumerate, cfg);
  auto* verify = app.add_subcommand("verify", "Check one mutation sequence");
  add_run_flags(verify, cfg);
  std::string literal;
  verify->add_option("sequence", literal, "Comma-separated one-based labels")->required();
  auto* exporter = app.add_subcommand("export", "Export the explored graph");
  add_run_flags(exporter, cfg);
  std::string graph = "dag";
  exporter->add_option("--graph", graph, "dag (green, bounded) or full (all mutations)")
      ->check(CLI::IsMember({"dag", "full"}));
  auto* cat = app.add_subcommand("catalog", "Shipped quivers");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "List names");
  auto* cat_emit = cat->add_subcommand("emit", "Write a quiver");
  std::string emit_name;
  cat_emit->add_option("name", emit_name)->required();
  cat_emit->add_option("--format", cfg.format, "text|json|dot");
  cat_emit->add_option("--output", cfg.output, "Output path");
  auto* serve = app.add_subcommand("serve", "Run the session service");
  std::string host = "127.0.0.1";
  int port = 8080;
  int ttl = 3600;
  serve->add_option("--host", host);
  serve->add_option("--port", port);
  serve->add_option("--idle-ttl", ttl, "Session idle expiry in seconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*count) return cmd_count(cfg);
    if (*enumerate) return cmd_enumerate(cfg);
    if (*verify) return cmd_verify(cfg, literal);
    if (*exporter) return cmd_export(cfg, graph);
    if (*cat_list) return cmd_catalog_list();
    if (*cat_emit) return cmd_catalog_emit(emit_name, cfg.format, cfg.output);
    if (*serve) {
      service::ManagerOptions mo;
      mo.idle_ttl = std::chrono::seconds(ttl);
      service::SessionManager manager(mo);
      std::cerr << "listening on " << host << ':' << port << '\n';
      return service::serve(host, port, manager) ? kOk : kInputError;
    }
  } catch (const BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << " (" << e.nodes() << " nodes)\n";
    std::cerr << "partial histogram:\n" << io::histogram_text(e.partial());
    return kBudgetExceeded;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
