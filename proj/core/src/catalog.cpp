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

#include "greenseq/catalog.hpp"

#include <deque>
#include <regex>
#include <set>

#include "greenseq/error.hpp"

namespace greenseq::catalog {
namespace {

using ArrowList = std::vector<std::tuple<int, int, greenseq::Entry>>;

ExchangeMatrix valued(greenseq::Entry b12, greenseq::Entry b21, std::vector<greenseq::Entry> d) {
  return ExchangeMatrix(2, 0, {0, b12, b21, 0}, std::move(d));
}

ExchangeMatrix dynkin_a(int n, std::uint32_t orientation) {
  if (n < 1) throw InputError("type A needs rank >= 1");
  if (orientation > 1) throw InputError("type A orientation is 0 (linear) or 1 (alternating)");
  ArrowList a;
  for (int i = 1; i < n; ++i) {
    if (orientation == 0 || i % 2 == 0) {
      a.emplace_back(i, i + 1, 1);
    } else {
      a.emplace_back(i + 1, i, 1);
    }
  }
  return from_arrows(n, a);
}

ExchangeMatrix dynkin_d(int n) {
  if (n < 4) throw InputError("type D needs rank >= 4");
  ArrowList a;
  for (int i = 1; i < n - 2; ++i) a.emplace_back(i, i + 1, 1);
  a.emplace_back(n - 2, n - 1, 1);
  a.emplace_back(n - 2, n, 1);
  return from_arrows(n, a);
}

ExchangeMatrix dynkin_e(int n) {
  if (n < 6 || n > 8) throw InputError("type E needs rank 6, 7 or 8");
  ArrowList a;
  for (int i = 1; i < n - 1; ++i) a.emplace_back(i, i + 1, 1);
  a.emplace_back(3, n, 1);
  return from_arrows(n, a);
}

ExchangeMatrix affine_a(int p, int q) {
  const int n = p + q;
  if (p < 0 || q < 0 || n < 2) throw InputError("affine A needs p, q >= 0 and p + q >= 2");
  if (n == 2 && !(p == 1 && q == 1)) throw InputError("a 2-cycle is not a cluster quiver");
  ArrowList a;
  // Edge e joins vertex e and e+1 (mod n); the first p point forward.
  for (int e = 1; e <= n; ++e) {
    const int next = e % n + 1;
    if (e <= p) {
      a.emplace_back(e, next, 1);
    } else {
      a.emplace_back(next, e, 1);
    }
  }
  return from_arrows(n, a);
}

ExchangeMatrix affine_d(int n, std::uint32_t orientation) {
  if (n < 4) throw InputError("affine D needs n >= 4");
  ArrowList a;
  a.emplace_back(1, 3, 1);
  a.emplace_back(2, 3, 1);
  for (int i = 3; i < n - 1; ++i) a.emplace_back(i, i + 1, 1);
  a.emplace_back(n - 1, n, 1);
  a.emplace_back(n - 1, n + 1, 1);
  if (orientation >> a.size() != 0) throw InputError("affine D orientation mask has too many bits");
  for (std::size_t e = 0; e < a.size(); ++e) {
    if (orientation & (1u << e)) {
      auto& [from, to, mult] = a[e];
      std::swap(from, to);
    }
  }
  return from_arrows(n + 1, a);
}

}  // namespace

ExchangeMatrix from_arrows(int n, const ArrowList& arrows) {
  std::vector<greenseq::Entry> m(static_cast<std::size_t>(n) * n, 0);
  for (const auto& [from, to, mult] : arrows) {
    if (from < 1 || from > n || to < 1 || to > n || from == to) throw InputError("bad arrow");
    m[static_cast<std::size_t>(from - 1) * n + (to - 1)] += mult;
    m[static_cast<std::size_t>(to - 1) * n + (from - 1)] -= mult;
  }
  return ExchangeMatrix(n, 0, std::move(m));
}

IceQuiver make(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::DynkinA:
      return {dynkin_a(spec.rank, spec.orientation), {}};
    case Family::DynkinD:
      return {dynkin_d(spec.rank), {}};
    case Family::DynkinE:
      return {dynkin_e(spec.rank), {}};
    case Family::AffineA:
      return {affine_a(spec.p, spec.q), {}};
    case Family::AffineD:
      return {affine_d(spec.rank, spec.orientation), {}};
    case Family::Cycle:
      if (spec.rank < 3) throw InputError("oriented cycle needs at least 3 vertices");
      return {affine_a(0, spec.rank), {}};
    case Family::Kronecker:
      if (spec.rank < 1) throw InputError("Kronecker quiver needs at least one arrow");
      return {from_arrows(2, {{1, 2, spec.rank}}), {}};
    case Family::Markov:
      return {from_arrows(3, {{1, 2, 2}, {2, 3, 2}, {3, 1, 2}}), {}};
    case Family::McKay5:
      // Vertices 0..4 of the usual drawing are 1..5 here.
      return {from_arrows(5, {{1, 2, 1}, {1, 4, 2}, {2, 3, 1}, {2, 5, 2}, {5, 1, 1},
                              {5, 3, 2}, {3, 4, 1}, {3, 1, 2}, {4, 5, 1}, {4, 2, 2}}),
              {"0", "1", "2", "3", "4"}};
    case Family::X6:
      return {from_arrows(6, {{1, 6, 1}, {1, 2, 1}, {2, 3, 2}, {3, 1, 1}, {1, 4, 1}, {4, 5, 2}, {5, 1, 1}}), {}};
    case Family::X7:
      return {from_arrows(7, {{1, 2, 1}, {2, 3, 2}, {3, 1, 1}, {1, 4, 1}, {4, 5, 2}, {5, 1, 1}, {1, 6, 1},
                              {6, 7, 2}, {7, 1, 1}}),
              {}};
    case Family::Sphere4:
      return {from_arrows(6, {{1, 3, 1}, {1, 5, 1}, {3, 2, 1}, {5, 2, 1}, {2, 4, 1}, {2, 6, 1}, {4, 1, 1},
                              {6, 1, 1}}),
              {}};
    case Family::B2:
      return {valued(1, -2, {2, 1}), {}};
    case Family::C2:
      return {valued(2, -1, {1, 2}), {}};
    case Family::G2:
      return {valued(1, -3, {3, 1}), {}};
    case Family::Wild1:
      return {from_arrows(4, {{1, 2, 1}, {2, 3, 1}, {3, 4, 2}}), {}};
  }
  throw InputError("unknown family");
}

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> list = {
      {"a1", {Family::DynkinA, 1}, "single vertex", "A1"},
      {"a2", {Family::DynkinA, 2}, "1->2", "A2"},
      {"a3-linear", {Family::DynkinA, 3}, "1->2->3", "A3"},
      {"a3-alternating", {Family::DynkinA, 3, 0, 0, 1}, "1<-2->3", "A3"},
      {"a4-linear", {Family::DynkinA, 4}, "1->2->3->4", "A4"},
      {"d4", {Family::DynkinD, 4}, "1->2, 2->3, 2->4", "D4"},
      {"d5", {Family::DynkinD, 5}, "1->2->3, 3->4, 3->5", "D5"},
      {"e6", {Family::DynkinE, 6}, "1->2->3->4->5, 3->6", "E6"},
      {"b2", {Family::B2}, "valued rank 2, [[0,1],[-2,0]], d=(2,1)", "B2"},
      {"c2", {Family::C2}, "valued rank 2, [[0,2],[-1,0]], d=(1,2)", "C2"},
      {"g2", {Family::G2}, "valued rank 2, [[0,1],[-3,0]], d=(3,1)", "G2"},
      {"cycle3", {Family::Cycle, 3}, "oriented 3-cycle 2->1, 3->2, 1->3", "A3"},
      {"kronecker2", {Family::Kronecker, 2}, "two parallel arrows 1=>2", ""},
      {"kronecker3", {Family::Kronecker, 3}, "three parallel arrows 1=>2", ""},
      {"affine-a-2-1", {Family::AffineA, 0, 2, 1}, "1->2->3, 1->3", ""},
      {"affine-a-3-1", {Family::AffineA, 0, 3, 1}, "1->2->3->4, 1->4", ""},
      {"affine-a-4-1", {Family::AffineA, 0, 4, 1}, "1->2->3->4->5, 1->5", ""},
      {"affine-d4", {Family::AffineD, 4}, "1->3, 2->3, 3->4, 3->5", ""},
      {"affine-d5", {Family::AffineD, 5}, "1->3, 2->3, 3->4, 4->5, 4->6", ""},
      {"wild1", {Family::Wild1}, "1->2->3=>4", ""},
      {"markov", {Family::Markov}, "double arrows 1=>2=>3=>1 (once-punctured torus)", "", true},
      {"mckay5", {Family::McKay5}, "McKay quiver on vertices 0..4", "", true},
      {"x6", {Family::X6}, "exceptional mutation-finite X6", ""},
      {"x7", {Family::X7}, "exceptional mutation-finite X7", ""},
      {"sphere4", {Family::Sphere4}, "triangulated sphere with four punctures", ""},
  };
  return list;
}

CatalogEntry lookup(const std::string& name) {
  for (const auto& e : entries())
    if (e.name == name) return e;
  std::smatch m;
  static const std::regex a_re(R"(a(\d+)(-linear|-alternating)?)");
  static const std::regex d_re(R"(d(\d+))");
  static const std::regex e_re(R"(e([678]))");
  static const std::regex aff_a_re(R"(affine-a-(\d+)-(\d+))");
  static const std::regex aff_d_re(R"(affine-d(\d+)(?:-o(\d+))?)");
  static const std::regex cycle_re(R"(cycle(\d+))");
  static const std::regex kron_re(R"(kronecker(\d+))");
  auto num = [](const std::ssub_match& s) { return std::stoi(s.str()); };
  CatalogEntry out;
  out.name = name;
  if (std::regex_match(name, m, a_re)) {
    const bool alt = m[2].matched && m[2].str() == "-alternating";
    out.spec = {Family::DynkinA, num(m[1]), 0, 0, alt ? 1u : 0u};
    out.dynkin_type = "A" + m[1].str();
  } else if (std::regex_match(name, m, d_re)) {
    out.spec = {Family::DynkinD, num(m[1])};
    out.dynkin_type = "D" + m[1].str();
  } else if (std::regex_match(name, m, e_re)) {
    out.spec = {Family::DynkinE, num(m[1])};
    out.dynkin_type = "E" + m[1].str();
  } else if (std::regex_match(name, m, aff_a_re)) {
    out.spec = {Family::AffineA, 0, num(m[1]), num(m[2])};
  } else if (std::regex_match(name, m, aff_d_re)) {
    out.spec = {Family::AffineD, num(m[1]), 0, 0, m[2].matched ? static_cast<std::uint32_t>(num(m[2])) : 0u};
  } else if (std::regex_match(name, m, cycle_re)) {
    out.spec = {Family::Cycle, num(m[1])};
  } else if (std::regex_match(name, m, kron_re)) {
    out.spec = {Family::Kronecker, num(m[1])};
  } else {
    throw InputError("unknown catalog quiver '" + name + "'");
  }
  make(out.spec);  // validates parameters
  return out;
}

namespace {

std::uint64_t close_roots(const std::vector<std::vector<greenseq::Entry>>& cartan) {
  const std::size_t n = cartan.size();
  constexpr std::size_t kLimit = 100000;
  std::set<std::vector<greenseq::Entry>> roots;
  std::deque<std::vector<greenseq::Entry>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<greenseq::Entry> e(n, 0);
    e[i] = 1;
    roots.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto v = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      // s_i(v) = v - <alpha_i^vee, v> alpha_i
      greenseq::Entry pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += cartan[i][j] * v[j];
      if (pairing == 0) continue;
      auto w = v;
      w[i] -= pairing;
      if (roots.insert(w).second) {
        if (roots.size() > kLimit) throw InputError("root system is not finite");
        queue.push_back(std::move(w));
      }
    }
  }
  std::uint64_t positive = 0;
  for (const auto& r : roots) {
    bool pos = true;
    for (auto x : r) pos &= x >= 0;
    positive += pos ? 1 : 0;
  }
  return positive;
}

}  // namespace

std::uint64_t positive_root_count(char type, int rank) {
  const int n = rank;
  if (n < 1) throw InputError("rank must be positive");
  std::vector<std::vector<greenseq::Entry>> a(static_cast<std::size_t>(n), std::vector<greenseq::Entry>(static_cast<std::size_t>(n), 0));
  auto link = [&](int i, int j, greenseq::Entry aij, greenseq::Entry aji) {
    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = aij;
    a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = aji;
  };
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      break;
    case 'B':
    case 'C':
      if (n < 2) throw InputError("types B and C need rank >= 2");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      if (type == 'B') {
        link(n - 2, n - 1, -2, -1);
      } else {
        link(n - 2, n - 1, -1, -2);
      }
      break;
    case 'D':
      if (n < 4) throw InputError("type D needs rank >= 4");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 3, n - 1, -1, -1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw InputError("type E needs rank 6, 7 or 8");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(2, n - 1, -1, -1);
      break;
    case 'F':
      if (n != 4) throw InputError("type F needs rank 4");
      link(0, 1, -1, -1);
      link(1, 2, -2, -1);
      link(2, 3, -1, -1);
      break;
    case 'G':
      if (n != 2) throw InputError("type G needs rank 2");
      link(0, 1, -1, -3);
      break;
    default:
      throw InputError(std::string("unknown Dynkin type ") + type);
  }
  return close_roots(a);
}

std::uint64_t positive_root_count(const ExchangeMatrix& q) {
  const int n = q.mutable_count();
  std::vector<std::vector<greenseq::Entry>> a(static_cast<std::size_t>(n), std::vector<greenseq::Entry>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const greenseq::Entry b = q(i, j);
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i == j ? 2 : -(b < 0 ? -b : b);
    }
  return close_roots(a);
}

}  // namespace greenseq::catalog
