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
#include <tuple>
#include <vector>

#include "greenseq/exchange_matrix.hpp"

namespace greenseq::catalog {

enum class Family {
  DynkinA,    // rank; orientation 0 = linear 1->2->...->n, 1 = alternating (even vertices are sources)
  DynkinD,    // rank >= 4: 1->2->...->(n-2), (n-2)->(n-1), (n-2)->n
  DynkinE,    // rank 6, 7, 8: chain 1->...->(n-1), 3->n
  AffineA,    // p clockwise and q counterclockwise arrows around a cycle of p+q vertices
  AffineD,    // rank = n >= 4, n+1 vertices; orientation bit e reverses the e-th arrow
  Cycle,      // oriented cycle 2->1, 3->2, ..., 1->n (same as AffineA with p = 0)
  Kronecker,  // rank = number of parallel arrows 1->2
  Markov,
  McKay5,
  X6,
  X7,
  Sphere4,
  B2,
  C2,
  G2,
  Wild1,  // 1->2->3 with a double arrow 3->4
};

struct FamilySpec {
  Family family = Family::DynkinA;
  int rank = 0;
  int p = 0;
  int q = 0;
  std::uint32_t orientation = 0;
};

// Throws InputError for invalid parameters.
IceQuiver make(const FamilySpec& spec);

// Quiver from one-based arrows (from, to, multiplicity); repeated pairs add up.
ExchangeMatrix from_arrows(int n, const std::vector<std::tuple<int, int, Entry>>& arrows);

struct CatalogEntry {
  std::string name;
  FamilySpec spec;
  std::string description;
  // Dynkin type such as "A3", "B2" or empty when not of finite type.
  std::string dynkin_type;
  // Set when it is known that no maximal green sequence exists.
  bool proven_empty = false;
};

// Named quivers shipped with the engine.
const std::vector<CatalogEntry>& entries();

// Resolves a shipped name or a parametric one: aN, aN-alternating, dN, eN,
// affine-a-P-Q, affine-dN[-oMASK], cycleN, kroneckerR. Throws InputError.
CatalogEntry lookup(const std::string& name);

// |Φ₊| by closing the simple roots under the simple reflections of the Cartan
// matrix. Throws InputError for types that are not finite.
std::uint64_t positive_root_count(char type, int rank);
// Same, using the Cartan companion (2 on the diagonal, -|b_ij| elsewhere).
std::uint64_t positive_root_count(const ExchangeMatrix& q);

}  // namespace greenseq::catalog
