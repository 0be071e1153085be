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

#include <cstdint>
#include <optional>
#include <string>

#include "greenseq/exchange_matrix.hpp"

namespace greenseq {

// Identifies an ice-quiver isomorphism class. Isomorphisms relabel mutable
// vertices only; frozen vertices are fixed pointwise.
struct CanonicalKey {
  std::string bytes;
  // Maps input labels to canonical labels: permuted(input, perm) is the
  // canonical representative.
  Permutation perm;
  // False when two distinct labelings produce the same serialization, i.e.
  // the ice quiver has a nontrivial automorphism.
  bool rigid = true;
};

// Canonical labeling by individualization/refinement. Each vertex starts with
// its weight and frozen row as invariant, cells are split by the multiset of
// (cell, b_ij, b_ji) over neighbours, and the lexicographically least
// serialization over all leaves of the search tree is kept.
CanonicalKey canonical_key(const ExchangeMatrix& r);

// The canonical representative permuted(r, canonical_key(r).perm).
ExchangeMatrix canonical_form(const ExchangeMatrix& r);

// σ with permuted(a, σ) == b, if any.
std::optional<Permutation> find_isomorphism(const ExchangeMatrix& a, const ExchangeMatrix& b);

// 64-bit FNV-1a of the key bytes, and its 16-digit hex rendering.
std::uint64_t short_hash(const std::string& bytes);
std::string short_hash_hex(const std::string& bytes);

}  // namespace greenseq
