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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "greenseq/canonical.hpp"
#include "greenseq/error.hpp"
#include "greenseq/exchange_matrix.hpp"

namespace greenseq {

// Number of maximal green sequences per length, for lengths 0..max_explored.
class LengthHistogram {
 public:
  LengthHistogram() = default;
  LengthHistogram(std::vector<BigInt> counts, int max_length, bool exhausted);

  const BigInt& count(int length) const;
  // Deepest level whose frontier was non-empty.
  int max_explored() const { return static_cast<int>(counts_.size()) - 1; }
  int max_length() const { return max_length_; }
  // True when no green path longer than max_explored exists at all.
  bool exhausted() const { return exhausted_; }

  bool empty() const { return total_ == 0; }
  const BigInt& total() const { return total_; }
  std::optional<int> min_length() const { return min_length_; }
  // Empirical maximal length: the largest realized length l, provided length
  // l+1 was explored and found empty (or the green graph was exhausted).
  // Only meaningful under the interval conjecture.
  std::optional<int> empirical_max_length() const { return empirical_max_; }

  friend bool operator==(const LengthHistogram& a, const LengthHistogram& b) {
    return a.counts_ == b.counts_;
  }

 private:
  std::vector<BigInt> counts_;
  int max_length_ = 0;
  bool exhausted_ = false;
  BigInt total_ = 0;
  std::optional<int> min_length_;
  std::optional<int> empirical_max_;
};

// True iff every length in [l_min, l0_max] is realized. Throws InputError when
// l0_max was not detected.
bool check_interval(const LengthHistogram& h);

class BudgetExceededError : public Error {
 public:
  BudgetExceededError(std::string message, std::size_t nodes, LengthHistogram partial)
      : Error(std::move(message)), nodes_(nodes), partial_(std::move(partial)) {}
  std::size_t nodes() const { return nodes_; }
  const LengthHistogram& partial() const { return partial_; }

 private:
  std::size_t nodes_;
  LengthHistogram partial_;
};

struct SearchOptions {
  int max_length = 0;
  std::size_t node_budget = 20'000'000;
  int jobs = 1;
  // g-monotonicity, rigidity, source/sink identification, acyclicity.
  bool check_invariants = true;
  // Keep only what the histogram needs: node keys, representatives, edge
  // relabelings, discovery labelings and per-node path counts are dropped.
  bool histogram_only = false;
  // Resident set size in bytes at which exploration gives up with
  // BudgetExceededError. 0 picks 80% of the physical or cgroup memory.
  std::size_t memory_limit = 0;
};

using NodeId = std::uint32_t;

struct DagEdge {
  int vertex;         // green vertex of the source representative
  NodeId target;
  Permutation relabel;  // permuted(mutate(source.rep, vertex), relabel) == target.rep
};

struct DagNode {
  std::string key;
  ExchangeMatrix rep;  // canonical representative
  std::vector<int> green;
  bool sink = false;
  bool expanded = false;
  std::vector<DagEdge> edges;
  // (depth, number of green paths from the source of that length), by depth.
  std::vector<std::pair<int, BigInt>> paths;
  // Labeling reached by the first discovered path: vertex j of rep is vertex
  // discovery[j] of the input quiver.
  Permutation discovery;
};

// Deduplicated forward part of the oriented exchange graph, explored level by
// level from the framed quiver up to a length bound.
class SearchDag {
 public:
  const std::vector<DagNode>& nodes() const { return nodes_; }
  const DagNode& node(NodeId id) const { return nodes_[id]; }
  NodeId source() const { return 0; }
  std::optional<NodeId> sink() const { return sink_; }
  std::optional<NodeId> find(const std::string& key) const;
  const ExchangeMatrix& quiver() const { return quiver_; }
  const std::string& coframed_key() const { return coframed_key_; }
  const LengthHistogram& histogram() const { return histogram_; }
  int max_length() const { return max_length_; }
  std::size_t edge_count() const;

 private:
  friend SearchDag explore(const ExchangeMatrix& q, const SearchOptions& options);
  ExchangeMatrix quiver_;
  std::vector<DagNode> nodes_;
  std::unordered_map<std::string, NodeId> index_;
  std::optional<NodeId> sink_;
  std::string coframed_key_;
  LengthHistogram histogram_;
  int max_length_ = 0;
};

// Requires q.frozen_count() == 0 and options.max_length >= 1.
SearchDag explore(const ExchangeMatrix& q, const SearchOptions& options);

LengthHistogram count_mgs(const ExchangeMatrix& q, const SearchOptions& options);

struct MutationSequence {
  enum class Status { Unchecked, MaximalGreen, Invalid };
  enum class Failure { None, BadLabel, NotGreen, NotMaximal };

  std::vector<int> vertices;
  Status status = Status::Unchecked;
  Failure failure = Failure::None;
  // One-based index of the failing step (see verify_sequence).
  int failing_step = 0;
  // Valid only for MaximalGreen: mutate_all(framed(Q), vertices) == permuted(coframed(Q), terminal_perm).
  Permutation terminal_perm;

  std::size_t length() const { return vertices.size(); }
  bool maximal_green() const { return status == Status::MaximalGreen; }
};

// Simulates the sequence on framed(q). A step at a non-green vertex fails at
// that step; a green sequence that does not end all-red fails at its last step.
MutationSequence verify_sequence(const ExchangeMatrix& q, const std::vector<int>& vertices);

// Receives sequences in lexicographic order; return false to stop early.
using SequenceSink = std::function<bool(const MutationSequence&)>;

// Every maximal green sequence of length <= max_length, lexicographically.
// Returns the number emitted.
std::uint64_t enumerate_mgs(const SearchDag& dag, const SequenceSink& sink);
std::uint64_t enumerate_mgs(const ExchangeMatrix& q, const SearchOptions& options, const SequenceSink& sink);

// (π⁻¹(i_l), ..., π⁻¹(i_1)) as a maximal green sequence of opposite(q).
MutationSequence opposition_map(const ExchangeMatrix& q, const MutationSequence& seq);

// Greedy peel of sources, smallest label first. Throws NotAcyclicError.
MutationSequence admissible_source_numbering(const ExchangeMatrix& q);

struct ExchangeGraph {
  std::vector<ExchangeMatrix> reps;
  std::vector<std::string> keys;
  // Green-oriented edges (source, vertex of source rep, target).
  std::vector<std::tuple<std::size_t, int, std::size_t>> edges;
  std::size_t size() const { return reps.size(); }
};

// Closure of [framed(q)] under all mutations. Throws BudgetExceededError when
// more than node_budget classes appear.
ExchangeGraph full_exchange_graph(const ExchangeMatrix& q, std::size_t node_budget);
std::size_t full_exchange_graph_size(const ExchangeMatrix& q, std::size_t node_budget);

// True when some green sequence of length <= depth takes state (a matrix in
// the mutation class of a framed quiver) to an all-red matrix.
bool completes_within(const ExchangeMatrix& state, int depth, std::size_t node_budget = 1'000'000);

// n * (n + 3)
int default_max_length(const ExchangeMatrix& q);

}  // namespace greenseq
