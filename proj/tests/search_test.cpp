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

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "greenseq/catalog.hpp"
#include "greenseq/search.hpp"
#include "oracles.hpp"
#include "properties.hpp"

namespace {

using namespace greenseq;
using catalog::Family;

ExchangeMatrix quiver(const std::string& name) { return catalog::make(catalog::lookup(name).spec).matrix; }

SearchOptions upto(int L, int jobs = 1) {
  SearchOptions o;
  o.max_length = L;
  o.jobs = jobs;
  return o;
}

std::map<int, long> as_map(const LengthHistogram& h) {
  std::map<int, long> out;
  for (int l = 0; l <= h.max_explored(); ++l)
    if (h.count(l) != 0) out[l] = h.count(l).convert_to<long>();
  return out;
}

std::set<std::vector<int>> sequences(const SearchDag& dag) {
  std::set<std::vector<int>> out;
  enumerate_mgs(dag, [&](const MutationSequence& s) {
    EXPECT_TRUE(s.maximal_green());
    out.insert(s.vertices);
    return true;
  });
  return out;
}

TEST(Explore, A2Pentagon) {
  const SearchDag dag = explore(quiver("a2"), upto(10));
  EXPECT_EQ(dag.nodes().size(), 5u);
  EXPECT_EQ(dag.edge_count(), 5u);
  ASSERT_TRUE(dag.sink().has_value());
  EXPECT_EQ(dag.node(*dag.sink()).key, dag.coframed_key());
  EXPECT_EQ(as_map(dag.histogram()), (std::map<int, long>{{2, 1}, {3, 1}}));
  EXPECT_TRUE(dag.histogram().exhausted());
  EXPECT_EQ(sequences(dag), (std::set<std::vector<int>>{{0, 1}, {1, 0, 1}}));
}

TEST(Explore, KroneckerHasOneSequence) {
  const auto h = count_mgs(quiver("kronecker2"), upto(10));
  EXPECT_EQ(as_map(h), (std::map<int, long>{{2, 1}}));
  EXPECT_FALSE(h.exhausted());
  EXPECT_EQ(h.max_explored(), 10);
  EXPECT_EQ(h.empirical_max_length(), 2);
}

TEST(Explore, CyclicTriangle) {
  const auto q = quiver("cycle3");
  const auto h = count_mgs(q, upto(default_max_length(q)));
  // reference: labeled brute force
  const auto ref = oracle::labeled_histogram(q.rows(), 8);
  EXPECT_EQ(ref[4], 6u);
  EXPECT_EQ(ref[5], 3u);
  EXPECT_EQ(as_map(h), (std::map<int, long>{{4, 6}, {5, 3}}));
  EXPECT_EQ(h.min_length(), 4);
  EXPECT_TRUE(verify_sequence(q, {0, 1, 2, 0}).maximal_green());
}

TEST(Explore, A3Orientations) {
  for (const auto& [name, total] : {std::pair{"a3-linear", 9}, std::pair{"a3-alternating", 10}}) {
    const auto q = quiver(name);
    const auto h = count_mgs(q, upto(default_max_length(q)));
    EXPECT_EQ(h.total(), total) << name;
    EXPECT_EQ(h.min_length(), 3) << name;
    EXPECT_EQ(h.empirical_max_length(), 6) << name;
    EXPECT_TRUE(check_interval(h)) << name;
    uint64_t ref_total = 0;
    for (auto c : oracle::labeled_histogram(q.rows(), 8)) ref_total += c;
    EXPECT_EQ(ref_total, static_cast<uint64_t>(total)) << name;
  }
}

TEST(Explore, ValuedRankTwoLengthsAreNotAnInterval) {
  for (const auto& [name, lengths] : {std::pair{"b2", std::map<int, long>{{2, 1}, {4, 1}}},
                                      std::pair{"c2", std::map<int, long>{{2, 1}, {4, 1}}},
                                      std::pair{"g2", std::map<int, long>{{2, 1}, {6, 1}}}}) {
    const auto h = count_mgs(quiver(name), upto(10));
    EXPECT_EQ(as_map(h), lengths) << name;
    EXPECT_FALSE(check_interval(h)) << name;
  }
}

TEST(Explore, OrientationChangesCountsButNotBounds) {
  const auto a = count_mgs(catalog::make({Family::AffineD, 4, 0, 0, 0}).matrix, upto(24));
  const auto b = count_mgs(catalog::make({Family::AffineD, 4, 0, 0, 1}).matrix, upto(24));
  EXPECT_NE(a.total(), b.total());
  EXPECT_EQ(a.min_length(), b.min_length());
  EXPECT_EQ(a.empirical_max_length(), b.empirical_max_length());
}

TEST(Explore, MarkovHasNoSequenceInRange) {
  const auto h = count_mgs(quiver("markov"), upto(8));
  EXPECT_TRUE(h.empty());
  EXPECT_FALSE(h.min_length().has_value());
  EXPECT_THROW(check_interval(h), InputError);
}

TEST(Explore, BudgetExceededKeepsPartialCounts) {
  SearchOptions o = upto(40);
  o.node_budget = 50;
  try {
    explore(quiver("wild1"), o);
    FAIL() << "expected BudgetExceededError";
  } catch (const BudgetExceededError& e) {
    EXPECT_GE(e.nodes(), 50u);
    EXPECT_EQ(e.partial().count(4), 1);
  }
}

TEST(Explore, MemoryLimitIsABudget) {
  SearchOptions o = upto(40);
  o.memory_limit = 1;
  EXPECT_THROW(explore(quiver("wild1"), o), BudgetExceededError);
}

TEST(Explore, HistogramOnlyMatchesFullDag) {
  for (const char* name : {"a3-linear", "cycle3", "wild1", "affine-d4", "b2"}) {
    SearchOptions o = upto(12);
    const SearchDag full = explore(quiver(name), o);
    o.histogram_only = true;
    const SearchDag lean = explore(quiver(name), o);
    EXPECT_EQ(full.histogram(), lean.histogram()) << name;
    EXPECT_EQ(full.nodes().size(), lean.nodes().size()) << name;
    EXPECT_EQ(full.edge_count(), lean.edge_count()) << name;
    EXPECT_EQ(full.sink(), lean.sink()) << name;
    if (full.sink()) EXPECT_EQ(lean.find(full.node(*full.sink()).key), full.sink()) << name;
  }
}

TEST(Explore, JobsDoNotChangeTheResult) {
  const auto q = quiver("wild1");
  const SearchDag one = explore(q, upto(8, 1));
  const SearchDag four = explore(q, upto(8, 4));
  ASSERT_EQ(one.nodes().size(), four.nodes().size());
  for (std::size_t i = 0; i < one.nodes().size(); ++i) EXPECT_EQ(one.nodes()[i].key, four.nodes()[i].key);
  EXPECT_EQ(one.histogram(), four.histogram());
  std::vector<std::vector<int>> a, b;
  enumerate_mgs(one, [&](const MutationSequence& s) { return a.push_back(s.vertices), true; });
  enumerate_mgs(four, [&](const MutationSequence& s) { return b.push_back(s.vertices), true; });
  EXPECT_EQ(a, b);
}

TEST(Explore, RejectsFrozenInput) {
  EXPECT_THROW(explore(framed(quiver("a2")), upto(4)), InputError);
}

TEST(Enumerate, AgreesWithHistogram) {
  for (const char* name : {"a3-linear", "cycle3", "affine-a-2-1", "d4"}) {
    const auto q = quiver(name);
    const SearchDag dag = explore(q, upto(default_max_length(q)));
    std::map<int, long> by_length;
    const auto n = enumerate_mgs(dag, [&](const MutationSequence& s) {
      ++by_length[static_cast<int>(s.length())];
      EXPECT_EQ(verify_sequence(q, s.vertices).terminal_perm, s.terminal_perm);
      return true;
    });
    EXPECT_EQ(by_length, as_map(dag.histogram())) << name;
    EXPECT_EQ(BigInt(n), dag.histogram().total()) << name;
  }
}

TEST(Enumerate, SinkCanStopEarly) {
  int seen = 0;
  const auto n = enumerate_mgs(quiver("a3-linear"), upto(18), [&](const MutationSequence&) { return ++seen < 3; });
  EXPECT_EQ(seen, 3);
  EXPECT_EQ(n, 3u);
}

TEST(Verify, Outcomes) {
  const auto a2 = quiver("a2");
  auto s = verify_sequence(a2, {0, 1});
  EXPECT_TRUE(s.maximal_green());
  EXPECT_EQ(s.terminal_perm, identity_permutation(2));
  s = verify_sequence(a2, {1, 0, 1});
  EXPECT_TRUE(s.maximal_green());
  EXPECT_EQ(s.terminal_perm, (Permutation{1, 0}));
  s = verify_sequence(a2, {1, 0});
  EXPECT_EQ(s.failure, MutationSequence::Failure::NotMaximal);
  EXPECT_EQ(s.failing_step, 2);
  s = verify_sequence(a2, {0, 0});
  EXPECT_EQ(s.failure, MutationSequence::Failure::NotGreen);
  EXPECT_EQ(s.failing_step, 2);
  s = verify_sequence(a2, {2});
  EXPECT_EQ(s.failure, MutationSequence::Failure::BadLabel);
  EXPECT_EQ(s.failing_step, 1);
  s = verify_sequence(a2, {});
  EXPECT_EQ(s.failure, MutationSequence::Failure::NotMaximal);
  EXPECT_EQ(s.failing_step, 0);
}

TEST(Verify, TerminalPermutationMapsToCoframed) {
  const auto q = quiver("cycle3");
  const auto s = verify_sequence(q, {0, 1, 2, 0});
  ASSERT_TRUE(s.maximal_green());
  auto r = framed(q);
  for (int v : s.vertices) r = mutate(r, v);
  EXPECT_EQ(permuted(r, s.terminal_perm), coframed(q));
}

TEST(Opposition, A2) {
  const auto a2 = quiver("a2");
  auto t = opposition_map(a2, verify_sequence(a2, {0, 1}));
  EXPECT_TRUE(t.maximal_green());
  EXPECT_EQ(t.vertices, (std::vector<int>{1, 0}));
  t = opposition_map(a2, verify_sequence(a2, {1, 0, 1}));
  EXPECT_TRUE(t.maximal_green());
  EXPECT_EQ(t.vertices, (std::vector<int>{0, 1, 0}));
  EXPECT_THROW(opposition_map(a2, verify_sequence(a2, {1, 0})), InputError);
}

TEST(Opposition, Property) {
  auto r = props::opposition(120, 5);
  EXPECT_EQ(r.failures, 0u) << r.first_failure;
}

TEST(SourceNumbering, Examples) {
  EXPECT_EQ(admissible_source_numbering(quiver("a3-linear")).vertices, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(admissible_source_numbering(quiver("a1")).vertices, (std::vector<int>{0}));
  const auto v = catalog::from_arrows(3, {{2, 1, 1}, {2, 3, 1}});
  const auto s = admissible_source_numbering(v);
  EXPECT_EQ(s.vertices, (std::vector<int>{1, 0, 2}));
  EXPECT_TRUE(s.maximal_green());
  EXPECT_THROW(admissible_source_numbering(quiver("cycle3")), NotAcyclicError);
}

TEST(SourceNumbering, Property) {
  auto r = props::admissible_numberings(200, 5);
  EXPECT_EQ(r.failures, 0u) << r.first_failure;
}

TEST(ExchangeGraph, FiniteTypeSizes) {
  EXPECT_EQ(full_exchange_graph_size(quiver("a1"), 100), 2u);
  EXPECT_EQ(full_exchange_graph_size(quiver("a2"), 100), 5u);
  EXPECT_EQ(full_exchange_graph_size(quiver("a3-linear"), 100), 14u);
  EXPECT_EQ(full_exchange_graph_size(quiver("a3-alternating"), 100), 14u);
  EXPECT_EQ(oracle::exchange_graph_size(quiver("a3-alternating").rows()), 14u);
  EXPECT_EQ(oracle::exchange_graph_size(quiver("b2").rows()), 6u);
  EXPECT_EQ(full_exchange_graph_size(quiver("b2"), 100), 6u);
  const auto g = full_exchange_graph(quiver("a2"), 100);
  EXPECT_EQ(g.edges.size(), 5u);
  EXPECT_THROW(full_exchange_graph_size(quiver("kronecker2"), 50), BudgetExceededError);
}

TEST(Completion, Depth) {
  const auto r = framed(quiver("a2"));
  EXPECT_TRUE(completes_within(r, 2));
  EXPECT_FALSE(completes_within(r, 1));
  EXPECT_TRUE(completes_within(coframed(quiver("a2")), 0));
  EXPECT_FALSE(completes_within(framed(quiver("markov")), 6));
}

TEST(Histogram, IntervalCheck) {
  const LengthHistogram gap({0, 0, 1, 0, 1, 0}, 5, false);
  EXPECT_EQ(gap.empirical_max_length(), 4);
  EXPECT_FALSE(check_interval(gap));
  const LengthHistogram edge({0, 0, 1, 1}, 3, false);
  EXPECT_FALSE(edge.empirical_max_length().has_value());
  EXPECT_THROW(check_interval(edge), InputError);
  const LengthHistogram done({0, 0, 1, 1}, 3, true);
  EXPECT_EQ(done.empirical_max_length(), 3);
  EXPECT_TRUE(check_interval(done));
  EXPECT_EQ(done.total(), 2);
}

TEST(Properties, DedupAgreesWithLabeledSearch) {
  auto r = props::dedup_vs_labeled(150, 9);
  EXPECT_EQ(r.failures, 0u) << r.first_failure;
}

TEST(Properties, GreenCountDropsByAtMostOne) {
  auto r = props::g_monotonicity(500, 9);
  EXPECT_EQ(r.failures, 0u) << r.first_failure;
}

TEST(Properties, TerminalKeys) {
  auto r = props::terminal_keys(300, 9);
  EXPECT_EQ(r.failures, 0u) << r.first_failure;
}

}  // namespace
