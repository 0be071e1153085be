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

#include "greenseq/canonical.hpp"
#include "greenseq/catalog.hpp"
#include "oracles.hpp"
#include "properties.hpp"

namespace {

using namespace greenseq;

ExchangeMatrix cycle3() { return catalog::make({catalog::Family::Cycle, 3}).matrix; }

TEST(Canonical, KeyIgnoresLabels) {
  auto q = catalog::make({catalog::Family::DynkinA, 3}).matrix;
  auto k = canonical_key(framed(q));
  for (Permutation s : {Permutation{1, 0, 2}, Permutation{2, 1, 0}, Permutation{1, 2, 0}})
    EXPECT_EQ(canonical_key(permuted(framed(q), s)).bytes, k.bytes);
  EXPECT_TRUE(k.rigid);
}

TEST(Canonical, FormIsAppliedPermutation) {
  auto r = mutate(framed(cycle3()), 0);
  auto k = canonical_key(r);
  EXPECT_TRUE(is_permutation(k.perm));
  EXPECT_EQ(canonical_form(r), permuted(r, k.perm));
  EXPECT_EQ(canonical_key(canonical_form(r)).bytes, k.bytes);
}

TEST(Canonical, FrozenVerticesAreNotRelabelled) {
  // framed and coframed A2 have the same principal part but differ on the frame
  auto q = catalog::make({catalog::Family::DynkinA, 2}).matrix;
  EXPECT_NE(canonical_key(framed(q)).bytes, canonical_key(coframed(q)).bytes);
  // isomorphic only if the two frozen vertices could be swapped as well
  auto two = ExchangeMatrix::from_rows({{0, 0, 1, 0}, {0, 0, 0, 2}});
  auto swapped = ExchangeMatrix::from_rows({{0, 0, 2, 0}, {0, 0, 0, 1}});
  EXPECT_TRUE(find_isomorphism(two, permuted(two, {1, 0})).has_value());
  EXPECT_NE(canonical_key(two).bytes, canonical_key(swapped).bytes);
  EXPECT_FALSE(find_isomorphism(two, swapped).has_value());
}

TEST(Canonical, SymmetricUnframedQuiversAreNotRigid) {
  EXPECT_FALSE(canonical_key(cycle3()).rigid);
  EXPECT_FALSE(canonical_key(catalog::make({catalog::Family::Markov}).matrix).rigid);
  EXPECT_TRUE(canonical_key(catalog::make({catalog::Family::DynkinA, 3}).matrix).rigid);
  EXPECT_FALSE(canonical_key(catalog::make({catalog::Family::DynkinA, 3, 0, 0, 1}).matrix).rigid);
}

TEST(Canonical, WeightsDistinguishValuedQuivers) {
  auto b2 = ExchangeMatrix::from_rows({{0, 1}, {-2, 0}}, {2, 1});
  auto c2 = ExchangeMatrix::from_rows({{0, 2}, {-1, 0}}, {1, 2});
  EXPECT_NE(canonical_key(b2).bytes, canonical_key(c2).bytes);
  auto b2_swapped = permuted(b2, {1, 0});
  auto iso = find_isomorphism(b2, b2_swapped);
  ASSERT_TRUE(iso.has_value());
  EXPECT_EQ(*iso, (Permutation{1, 0}));
}

TEST(Canonical, TerminalStateOfCycleMatchesCoframedUpToPermutation) {
  auto r = framed(cycle3());
  for (int v : {0, 1, 2, 0}) r = mutate(r, v);
  EXPECT_EQ(green_count(r), 0);
  auto sigma = find_isomorphism(r, coframed(cycle3()));
  ASSERT_TRUE(sigma.has_value());
  EXPECT_EQ(permuted(r, *sigma), coframed(cycle3()));
  EXPECT_EQ(*sigma, *oracle::isomorphism(r.rows(), coframed(cycle3()).rows()));
}

TEST(Canonical, ShortHash) {
  EXPECT_EQ(short_hash(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(short_hash_hex("a"), "af63dc4c8601ec8c");
  auto q = framed(cycle3());
  EXPECT_EQ(short_hash_hex(canonical_key(q).bytes).size(), 16u);
}

TEST(Canonical, AgreesWithExhaustiveIsomorphism) {
  auto r = props::canonical_soundness(400, 3);
  EXPECT_EQ(r.failures, 0u) << r.first_failure;
}

TEST(Canonical, LargerRankIsStable) {
  // every relabeling of a rank 6 state lands on one key
  auto q = catalog::make({catalog::Family::DynkinE, 6}).matrix;
  auto r = framed(q);
  for (int v : {2, 0, 5, 3, 1}) r = mutate(r, v);
  const auto key = canonical_key(r).bytes;
  Permutation s = identity_permutation(6);
  int checked = 0;
  do {
    if (++checked % 7) continue;
    EXPECT_EQ(canonical_key(permuted(r, s)).bytes, key);
  } while (std::next_permutation(s.begin(), s.end()));
}

}  // namespace
