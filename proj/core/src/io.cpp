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

#include "greenseq/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "greenseq/canonical.hpp"
#include "greenseq/error.hpp"

namespace greenseq::io {
namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<Entry> parse_ints(const std::string& line, std::size_t line_no) {
  std::istringstream in(line);
  std::vector<Entry> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size())
      throw InputError("line " + std::to_string(line_no) + ": '" + tok + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

}  // namespace

ExchangeMatrix parse_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string t = trim(line);
    if (!t.empty()) lines.emplace_back(no, std::move(t));
  }
  if (lines.empty()) throw InputError("empty quiver file");
  auto header = parse_ints(lines[0].second, lines[0].first);
  if (header.size() != 2) throw InputError("first line must be 'n m'");
  const Entry n = header[0];
  const Entry m = header[1];
  if (n < 1 || m < 0 || n > 4096 || m > 4096) throw InputError("bad dimensions in header");
  if (lines.size() < static_cast<std::size_t>(n) + 1) throw InputError("expected " + std::to_string(n) + " matrix rows");
  std::vector<Entry> entries;
  for (Entry i = 0; i < n; ++i) {
    const auto& [no, l] = lines[static_cast<std::size_t>(i) + 1];
    auto row = parse_ints(l, no);
    if (row.size() != static_cast<std::size_t>(n + m))
      throw InputError("line " + std::to_string(no) + ": expected " + std::to_string(n + m) + " entries");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  std::vector<Entry> d;
  const std::size_t rest = static_cast<std::size_t>(n) + 1;
  if (lines.size() > rest) {
    const auto& [no, l] = lines[rest];
    if (l.rfind("D:", 0) != 0) throw InputError("line " + std::to_string(no) + ": unexpected content");
    d = parse_ints(l.substr(2), no);
    if (lines.size() > rest + 1) throw InputError("trailing content after symmetrizer line");
  }
  return ExchangeMatrix(static_cast<int>(n), static_cast<int>(m), std::move(entries), std::move(d));
}

std::string to_text(const ExchangeMatrix& b) {
  std::ostringstream out;
  out << b.mutable_count() << ' ' << b.frozen_count() << '\n';
  for (int i = 0; i < b.mutable_count(); ++i) {
    for (int j = 0; j < b.columns(); ++j) out << (j ? " " : "") << b(i, j);
    out << '\n';
  }
  if (b.has_symmetrizer()) {
    out << "D:";
    for (Entry d : b.symmetrizer()) out << ' ' << d;
    out << '\n';
  }
  return out.str();
}

ExchangeMatrix from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    const int m = j.at("m").get<int>();
    const auto rows = j.at("matrix").get<std::vector<std::vector<Entry>>>();
    if (rows.size() != static_cast<std::size_t>(n)) throw InputError("matrix must have n rows");
    std::vector<Entry> entries;
    for (const auto& r : rows) {
      if (r.size() != static_cast<std::size_t>(n + m)) throw InputError("matrix rows must have n+m entries");
      entries.insert(entries.end(), r.begin(), r.end());
    }
    std::vector<Entry> d;
    if (j.contains("symmetrizer") && !j.at("symmetrizer").is_null()) d = j.at("symmetrizer").get<std::vector<Entry>>();
    return ExchangeMatrix(n, m, std::move(entries), std::move(d));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad quiver JSON: ") + e.what());
  }
}

nlohmann::json to_json(const ExchangeMatrix& b) {
  nlohmann::json j;
  j["n"] = b.mutable_count();
  j["m"] = b.frozen_count();
  j["matrix"] = b.rows();
  if (b.has_symmetrizer()) j["symmetrizer"] = b.symmetrizer();
  return j;
}

ExchangeMatrix parse_quiver(std::string_view text) {
  const std::string t = trim(text);
  if (!t.empty() && t.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(t);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("bad quiver JSON: ") + e.what());
    }
    return from_json(j);
  }
  return parse_text(t);
}

ExchangeMatrix read_quiver_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_quiver(buf.str());
}

std::string quiver_dot(const IceQuiver& q) {
  const ExchangeMatrix& b = q.matrix;
  const int n = b.mutable_count();
  std::vector<std::string> fill(static_cast<std::size_t>(n), "white");
  if (b.frozen_count() == n) {
    try {
      auto colors = vertex_colors(b);
      for (int i = 0; i < n; ++i)
        fill[static_cast<std::size_t>(i)] = colors[static_cast<std::size_t>(i)] == VertexColor::Green ? "green" : "red";
    } catch (const SignIncoherentError&) {
      // Leave uncolored; the drawing is still useful for debugging.
    }
  }
  std::ostringstream out;
  out << "digraph quiver {\n";
  for (int v = 0; v < b.columns(); ++v) {
    out << "  v" << v + 1 << " [label=\"" << q.label(v) << "\", ";
    if (v < n) {
      out << "shape=circle, style=filled, fillcolor=" << fill[static_cast<std::size_t>(v)];
    } else {
      out << "shape=square";
    }
    out << "];\n";
  }
  for (const Arrow& a : arrows(b)) {
    out << "  v" << a.from + 1 << " -> v" << a.to + 1;
    if (a.to < n && a.from < n && b.has_symmetrizer() && b(a.to, a.from) != -a.multiplicity) {
      out << " [label=\"(" << a.multiplicity << "," << -b(a.to, a.from) << ")\"]";
    } else if (a.multiplicity > 1) {
      out << " [label=\"" << a.multiplicity << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string dag_dot(const SearchDag& dag) {
  std::ostringstream out;
  out << "digraph oriented_exchange_graph {\n";
  for (NodeId id = 0; id < dag.nodes().size(); ++id) {
    const auto& node = dag.node(id);
    out << "  \"" << short_hash_hex(node.key) << "\" [label=\"g=" << node.green.size() << "\"";
    if (id == dag.source()) out << ", color=green, penwidth=2";
    if (node.sink) out << ", color=red, penwidth=2";
    out << "];\n";
  }
  for (const auto& node : dag.nodes()) {
    for (const auto& e : node.edges) {
      out << "  \"" << short_hash_hex(node.key) << "\" -> \"" << short_hash_hex(dag.node(e.target).key)
          << "\" [label=\"" << node.discovery[static_cast<std::size_t>(e.vertex)] + 1 << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string dag_edge_list(const SearchDag& dag) {
  std::ostringstream out;
  for (const auto& node : dag.nodes())
    for (const auto& e : node.edges)
      out << short_hash_hex(node.key) << ' ' << node.discovery[static_cast<std::size_t>(e.vertex)] + 1 << ' '
          << short_hash_hex(dag.node(e.target).key) << '\n';
  return out.str();
}

std::string exchange_graph_dot(const ExchangeGraph& g) {
  std::ostringstream out;
  out << "digraph exchange_graph {\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    const int greens = green_count(g.reps[i]);
    out << "  \"" << short_hash_hex(g.keys[i]) << "\" [label=\"g=" << greens << "\"";
    if (greens == g.reps[i].mutable_count()) out << ", color=green, penwidth=2";
    if (greens == 0) out << ", color=red, penwidth=2";
    out << "];\n";
  }
  for (const auto& [src, vertex, dst] : g.edges)
    out << "  \"" << short_hash_hex(g.keys[src]) << "\" -> \"" << short_hash_hex(g.keys[dst]) << "\" [label=\""
        << vertex + 1 << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string histogram_csv(const LengthHistogram& h) {
  std::ostringstream out;
  out << "length,count\n";
  if (h.min_length())
    for (int l = *h.min_length(); l <= h.max_explored(); ++l) out << l << ',' << h.count(l) << '\n';
  return out.str();
}

std::string histogram_text(const LengthHistogram& h) {
  std::ostringstream out;
  if (h.min_length())
    for (int l = *h.min_length(); l <= h.max_explored(); ++l) out << l << ':' << h.count(l) << '\n';
  return out.str();
}

nlohmann::json histogram_json(const LengthHistogram& h) {
  nlohmann::json j;
  nlohmann::json counts = nlohmann::json::object();
  if (h.min_length())
    for (int l = *h.min_length(); l <= h.max_explored(); ++l) counts[std::to_string(l)] = h.count(l).str();
  j["counts"] = counts;
  j["total"] = h.total().str();
  j["max_length"] = h.max_length();
  j["max_explored"] = h.max_explored();
  j["l_min"] = h.min_length() ? nlohmann::json(*h.min_length()) : nlohmann::json(nullptr);
  j["l0_max"] = h.empirical_max_length() ? nlohmann::json(*h.empirical_max_length()) : nlohmann::json(nullptr);
  j["interval"] = h.empirical_max_length() ? nlohmann::json(check_interval(h)) : nlohmann::json(nullptr);
  return j;
}

std::string sequence_line(const std::vector<int>& vertices) {
  std::string out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vertices[i] + 1);
  }
  return out;
}

std::vector<int> parse_sequence(std::string_view text) {
  std::string s(text);
  for (char& c : s)
    if (c == ',' || c == '(' || c == ')') c = ' ';
  std::vector<int> out;
  for (Entry v : parse_ints(s, 1)) {
    if (v < 1 || v > 1'000'000) throw InputError("sequence labels are one-based positive integers");
    out.push_back(static_cast<int>(v) - 1);
  }
  return out;
}

std::string permutation_line(const Permutation& p) {
  std::vector<int> shifted(p.begin(), p.end());
  return sequence_line(shifted);
}

}  // namespace greenseq::io
