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

#include "greenseq/search.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <exception>
#include <fstream>
#include <thread>
#include <unordered_set>

#include <boost/dynamic_bitset.hpp>

#include <unistd.h>

namespace greenseq {

LengthHistogram::LengthHistogram(std::vector<BigInt> counts, int max_length, bool exhausted)
    : counts_(std::move(counts)), max_length_(max_length), exhausted_(exhausted) {
  if (counts_.empty()) counts_.assign(1, 0);
  std::optional<int> last;
  for (int l = 0; l <= max_explored(); ++l) {
    const BigInt& c = counts_[static_cast<std::size_t>(l)];
    if (c == 0) continue;
    total_ += c;
    if (!min_length_) min_length_ = l;
    last = l;
  }
  if (last && (*last + 1 <= max_explored() || exhausted_)) empirical_max_ = last;
}

const BigInt& LengthHistogram::count(int length) const {
  static const BigInt zero = 0;
  if (length < 0 || length > max_explored()) return zero;
  return counts_[static_cast<std::size_t>(length)];
}

bool check_interval(const LengthHistogram& h) {
  if (!h.empirical_max_length()) throw InputError("empirical maximal length was not detected");
  for (int l = *h.min_length(); l <= *h.empirical_max_length(); ++l)
    if (h.count(l) == 0) return false;
  return true;
}

std::optional<NodeId> SearchDag::find(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SearchDag::edge_count() const {
  std::size_t total = 0;
  for (const auto& n : nodes_) total += n.edges.size();
  return total;
}

int default_max_length(const ExchangeMatrix& q) {
  const int n = q.mutable_count();
  return n * (n + 3);
}

namespace {

bool all_red(const ExchangeMatrix& r) {
  for (int i = 0; i < r.mutable_count(); ++i)
    if (vertex_color(r, i) != VertexColor::Red) return false;
  return true;
}

struct Child {
  ExchangeMatrix rep;
  CanonicalKey key;
  std::vector<int> green;
};

Child make_child(const ExchangeMatrix& parent, int vertex) {
  Child c;
  ExchangeMatrix m = mutate(parent, vertex);
  c.key = canonical_key(m);
  c.rep = permuted(m, c.key.perm);
  c.green = green_vertices(c.rep);
  return c;
}

// Runs fn(i) for i in [0, count) on up to `jobs` threads; rethrows the first
// failure by index so error reporting does not depend on scheduling.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
  std::vector<std::thread> pool;
  pool.reserve(threads - 1);
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// Kahn's algorithm over expanded edges; empty when a cycle exists.
std::vector<NodeId> topological_order(const std::vector<DagNode>& nodes) {
  std::vector<std::size_t> indegree(nodes.size(), 0);
  for (const auto& n : nodes)
    for (const auto& e : n.edges) ++indegree[e.target];
  std::vector<NodeId> order;
  order.reserve(nodes.size());
  for (NodeId i = 0; i < nodes.size(); ++i)
    if (indegree[i] == 0) order.push_back(i);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& e : nodes[order[head]].edges)
      if (--indegree[e.target] == 0) order.push_back(e.target);
  }
  if (order.size() != nodes.size()) order.clear();
  return order;
}

std::size_t resident_bytes() {
  std::ifstream in("/proc/self/statm");
  std::size_t total = 0, resident = 0;
  if (!(in >> total >> resident)) return 0;
  return resident * static_cast<std::size_t>(sysconf(_SC_PAGESIZE));
}

std::size_t default_memory_limit() {
  std::size_t avail = 0;
  const long pages = sysconf(_SC_PHYS_PAGES);
  if (pages > 0) avail = static_cast<std::size_t>(pages) * static_cast<std::size_t>(sysconf(_SC_PAGESIZE));
  std::ifstream cg("/sys/fs/cgroup/memory.max");
  std::size_t cap = 0;
  if (cg >> cap && cap > 0 && (avail == 0 || cap < avail)) avail = cap;
  return avail / 10 * 8;
}

}  // namespace

SearchDag explore(const ExchangeMatrix& q, const SearchOptions& options) {
  if (q.frozen_count() != 0) throw InputError("explore needs a quiver without frozen vertices");
  if (options.max_length < 1) throw InputError("length bound must be at least 1");
  if (options.jobs < 1) throw InputError("worker count must be at least 1");
  const int max_length = options.max_length;
  const bool lean = options.histogram_only;
  const std::size_t memory_limit = options.memory_limit ? options.memory_limit : default_memory_limit();

  SearchDag dag;
  dag.quiver_ = q;
  dag.max_length_ = max_length;
  const ExchangeMatrix source = framed(q);
  const CanonicalKey source_key = canonical_key(source);
  dag.coframed_key_ = canonical_key(coframed(q)).bytes;

  auto& nodes = dag.nodes_;
  {
    DagNode root;
    root.key = source_key.bytes;
    root.rep = permuted(source, source_key.perm);
    root.green = green_vertices(root.rep);
    root.discovery = inverse(source_key.perm);
    root.paths.emplace_back(0, 1);
    dag.index_.emplace(root.key, 0);
    if (lean) root.key.clear();
    nodes.push_back(std::move(root));
  }

  std::vector<BigInt> hist(1, 0);
  std::vector<std::pair<NodeId, BigInt>> frontier{{0, BigInt(1)}};

  auto partial = [&] { return LengthHistogram(hist, max_length, false); };
  auto check_memory = [&](int depth) {
    if (memory_limit == 0 || resident_bytes() < memory_limit) return;
    throw BudgetExceededError("memory limit of " + std::to_string(memory_limit >> 20) + " MiB reached at depth " +
                                  std::to_string(depth),
                              nodes.size(), partial());
  };

  for (int depth = 0; depth < max_length; ++depth) {
    // Expand nodes seen for the first time at this depth.
    std::vector<NodeId> todo;
    for (const auto& [id, count] : frontier)
      if (!nodes[id].expanded) todo.push_back(id);
    std::vector<std::pair<NodeId, int>> tasks;
    for (NodeId id : todo)
      for (int v : nodes[id].green) tasks.emplace_back(id, v);
    constexpr std::size_t kChunk = 1 << 15;
    std::vector<Child> children;
    for (std::size_t base = 0; base < tasks.size(); base += kChunk) {
      const std::size_t chunk = std::min(kChunk, tasks.size() - base);
      children.assign(chunk, Child{});
      parallel_for(chunk, options.jobs, [&](std::size_t i) {
        children[i] = make_child(nodes[tasks[base + i].first].rep, tasks[base + i].second);
      });
      check_memory(depth + 1);

      for (std::size_t i = 0; i < chunk; ++i) {
        const auto [parent, vertex] = tasks[base + i];
        Child& child = children[i];
        if (options.check_invariants) {
          if (!child.key.rigid)
            throw InvariantError("a matrix in the mutation class of the framed quiver has a nontrivial automorphism");
          if (child.green.size() + 1 < nodes[parent].green.size())
            throw InvariantError("green count dropped by more than one along a green mutation");
        }
        NodeId target;
        auto it = dag.index_.find(child.key.bytes);
        if (it != dag.index_.end()) {
          target = it->second;
        } else {
          if (options.check_invariants) {
            const auto g = child.green.size();
            if (g == static_cast<std::size_t>(q.mutable_count()) && child.key.bytes != source_key.bytes)
              throw InvariantError("all-green matrix is not isomorphic to the framed quiver");
            if (g == 0 && child.key.bytes != dag.coframed_key_)
              throw InvariantError("all-red matrix is not isomorphic to the coframed quiver");
          }
          if (nodes.size() >= options.node_budget)
            throw BudgetExceededError("node budget of " + std::to_string(options.node_budget) + " exceeded at depth " +
                                          std::to_string(depth + 1),
                                      nodes.size(), partial());
          target = static_cast<NodeId>(nodes.size());
          DagNode node;
          node.rep = std::move(child.rep);
          node.green = std::move(child.green);
          node.sink = node.green.empty();
          if (!lean) node.discovery = compose(nodes[parent].discovery, inverse(child.key.perm));
          if (node.sink) dag.sink_ = target;
          dag.index_.emplace(child.key.bytes, target);
          if (!lean) node.key = std::move(child.key.bytes);
          nodes.push_back(std::move(node));
        }
        if (lean) child.key.perm.clear();
        nodes[parent].edges.push_back({vertex, target, std::move(child.key.perm)});
      }
    }
    children = {};
    for (NodeId id : todo) {
      nodes[id].expanded = true;
      nodes[id].edges.shrink_to_fit();
      if (lean) nodes[id].rep = ExchangeMatrix();
    }

    // Propagate path counts one level down; first-touch order keeps it deterministic.
    std::vector<std::pair<NodeId, BigInt>> next;
    std::unordered_map<NodeId, std::size_t> slot;
    for (const auto& [id, count] : frontier) {
      for (const auto& e : nodes[id].edges) {
        auto [pos, fresh] = slot.emplace(e.target, next.size());
        if (fresh) {
          next.emplace_back(e.target, count);
        } else {
          next[pos->second].second += count;
        }
      }
    }
    if (next.empty()) break;
    hist.push_back(0);
    for (const auto& [id, count] : next) {
      if (!lean) nodes[id].paths.emplace_back(depth + 1, count);
      if (nodes[id].sink) hist.back() = count;
    }
    frontier = std::move(next);
  }

  const bool exhausted =
      std::all_of(frontier.begin(), frontier.end(), [&](const auto& f) { return nodes[f.first].sink; });
  if (options.check_invariants && topological_order(nodes).empty())
    throw InvariantError("oriented cycle among explored classes");
  dag.histogram_ = LengthHistogram(std::move(hist), max_length, exhausted);
  return dag;
}

LengthHistogram count_mgs(const ExchangeMatrix& q, const SearchOptions& options) {
  SearchOptions lean = options;
  lean.histogram_only = true;
  return explore(q, lean).histogram();
}

MutationSequence verify_sequence(const ExchangeMatrix& q, const std::vector<int>& vertices) {
  MutationSequence seq;
  seq.vertices = vertices;
  seq.status = MutationSequence::Status::Invalid;
  const int n = q.mutable_count();
  ExchangeMatrix state = framed(q);
  for (std::size_t step = 0; step < vertices.size(); ++step) {
    const int v = vertices[step];
    seq.failing_step = static_cast<int>(step) + 1;
    if (v < 0 || v >= n) {
      seq.failure = MutationSequence::Failure::BadLabel;
      return seq;
    }
    if (vertex_color(state, v) != VertexColor::Green) {
      seq.failure = MutationSequence::Failure::NotGreen;
      return seq;
    }
    state = mutate(state, v);
  }
  seq.failing_step = static_cast<int>(vertices.size());
  if (!all_red(state)) {
    seq.failure = MutationSequence::Failure::NotMaximal;
    return seq;
  }
  // Row r carries c-vector -e_i exactly when r = π(i).
  Permutation pi(static_cast<std::size_t>(n), -1);
  for (int r = 0; r < n; ++r) {
    auto c = state.frozen_row(r);
    int hit = -1;
    for (int j = 0; j < n; ++j) {
      if (c[static_cast<std::size_t>(j)] == -1 && hit < 0) {
        hit = j;
      } else if (c[static_cast<std::size_t>(j)] != 0) {
        hit = -2;
        break;
      }
    }
    if (hit < 0) throw InvariantError("all-red matrix does not have c-matrix -P for a permutation P");
    pi[static_cast<std::size_t>(hit)] = r;
  }
  if (!is_permutation(pi) || permuted(coframed(q), pi) != state)
    throw InvariantError("all-red matrix is not a relabeled coframed quiver");
  seq.status = MutationSequence::Status::MaximalGreen;
  seq.failure = MutationSequence::Failure::None;
  seq.failing_step = 0;
  seq.terminal_perm = std::move(pi);
  return seq;
}

std::uint64_t enumerate_mgs(const SearchDag& dag, const SequenceSink& sink) {
  if (!dag.sink()) return 0;
  const auto& nodes = dag.nodes();
  const int max_length = dag.max_length();
  const NodeId target = *dag.sink();

  // reach[v][r]: some explored path of length r runs from v to the sink.
  const std::vector<NodeId> order = topological_order(nodes);
  if (order.empty()) throw InvariantError("oriented cycle among explored classes");
  std::vector<boost::dynamic_bitset<>> reach(nodes.size(),
                                             boost::dynamic_bitset<>(static_cast<std::size_t>(max_length) + 1));
  reach[target].set(0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto& mine = reach[*it];
    for (const auto& e : nodes[*it].edges) mine |= reach[e.target] << 1;
  }

  const Permutation coframed_perm = canonical_key(coframed(dag.quiver())).perm;
  const int n = dag.quiver().mutable_count();
  std::uint64_t emitted = 0;
  bool stop = false;
  MutationSequence seq;
  seq.status = MutationSequence::Status::MaximalGreen;

  // `labels` maps vertices of the current representative to input labels.
  std::function<void(NodeId, const Permutation&, int)> walk = [&](NodeId u, const Permutation& labels, int depth) {
    if (u == target) {
      seq.terminal_perm = compose(labels, coframed_perm);
      ++emitted;
      if (!sink(seq)) stop = true;
      return;
    }
    const Permutation rep_of = inverse(labels);
    const auto& node = nodes[u];
    for (int label = 0; label < n && !stop; ++label) {
      const int vertex = rep_of[static_cast<std::size_t>(label)];
      auto e = std::find_if(node.edges.begin(), node.edges.end(),
                            [vertex](const DagEdge& edge) { return edge.vertex == vertex; });
      if (e == node.edges.end()) continue;
      const auto& r = reach[e->target];
      bool useful = false;
      for (int rest = 0; depth + 1 + rest <= max_length; ++rest) {
        if (r.test(static_cast<std::size_t>(rest))) {
          useful = true;
          break;
        }
      }
      if (!useful) continue;
      seq.vertices.push_back(label);
      walk(e->target, compose(labels, inverse(e->relabel)), depth + 1);
      seq.vertices.pop_back();
    }
  };
  walk(dag.source(), dag.node(dag.source()).discovery, 0);
  return emitted;
}

std::uint64_t enumerate_mgs(const ExchangeMatrix& q, const SearchOptions& options, const SequenceSink& sink) {
  return enumerate_mgs(explore(q, options), sink);
}

MutationSequence opposition_map(const ExchangeMatrix& q, const MutationSequence& seq) {
  if (!seq.maximal_green()) throw InputError("opposition map needs a verified maximal green sequence");
  const Permutation inv = inverse(seq.terminal_perm);
  std::vector<int> out;
  out.reserve(seq.vertices.size());
  for (auto it = seq.vertices.rbegin(); it != seq.vertices.rend(); ++it)
    out.push_back(inv[static_cast<std::size_t>(*it)]);
  return verify_sequence(opposite(q), out);
}

MutationSequence admissible_source_numbering(const ExchangeMatrix& q) {
  if (q.frozen_count() != 0) throw InputError("source numbering needs a quiver without frozen vertices");
  if (!is_acyclic(q)) throw NotAcyclicError("quiver has an oriented cycle");
  const int n = q.mutable_count();
  ExchangeMatrix cur = q;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<int> order;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n && pick < 0; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      bool source = true;
      for (int j = 0; j < n; ++j) source &= cur(v, j) >= 0;
      if (source) pick = v;
    }
    if (pick < 0) throw NotAcyclicError("no source left while peeling");
    used[static_cast<std::size_t>(pick)] = true;
    order.push_back(pick);
    cur = mutate(cur, pick);
  }
  return verify_sequence(q, order);
}

ExchangeGraph full_exchange_graph(const ExchangeMatrix& q, std::size_t node_budget) {
  ExchangeGraph g;
  std::unordered_map<std::string, std::size_t> index;
  const ExchangeMatrix start = framed(q);
  const CanonicalKey k0 = canonical_key(start);
  index.emplace(k0.bytes, 0);
  g.keys.push_back(k0.bytes);
  g.reps.push_back(permuted(start, k0.perm));
  for (std::size_t head = 0; head < g.reps.size(); ++head) {
    const ExchangeMatrix rep = g.reps[head];
    for (int v = 0; v < rep.mutable_count(); ++v) {
      const bool green = vertex_color(rep, v) == VertexColor::Green;
      ExchangeMatrix m = mutate(rep, v);
      CanonicalKey k = canonical_key(m);
      auto [it, fresh] = index.emplace(k.bytes, g.reps.size());
      if (fresh) {
        if (g.reps.size() >= node_budget)
          throw BudgetExceededError("exchange graph exceeds " + std::to_string(node_budget) + " classes",
                                    g.reps.size(), LengthHistogram());
        g.keys.push_back(k.bytes);
        g.reps.push_back(permuted(m, k.perm));
      }
      if (green) g.edges.emplace_back(head, v, it->second);
    }
  }
  return g;
}

std::size_t full_exchange_graph_size(const ExchangeMatrix& q, std::size_t node_budget) {
  return full_exchange_graph(q, node_budget).size();
}

bool completes_within(const ExchangeMatrix& state, int depth, std::size_t node_budget) {
  if (all_red(state)) return true;
  std::unordered_set<std::string> seen;
  std::vector<ExchangeMatrix> level{canonical_form(state)};
  seen.insert(canonical_key(level.front()).bytes);
  for (int d = 0; d < depth && !level.empty(); ++d) {
    std::vector<ExchangeMatrix> next;
    for (const auto& r : level) {
      for (int v : green_vertices(r)) {
        ExchangeMatrix m = mutate(r, v);
        if (all_red(m)) return true;
        CanonicalKey k = canonical_key(m);
        if (!seen.insert(k.bytes).second) continue;
        if (seen.size() > node_budget) return false;
        next.push_back(permuted(m, k.perm));
      }
    }
    level = std::move(next);
  }
  return false;
}

}  // namespace greenseq
