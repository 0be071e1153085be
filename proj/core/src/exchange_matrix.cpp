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

#include "greenseq/exchange_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "greenseq/error.hpp"

namespace greenseq {

Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation inverse(const Permutation& p) {
  Permutation inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return inv;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
  return c;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

namespace checked {

Entry add(Entry a, Entry b) {
  Entry r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("matrix entry overflow in addition");
  return r;
}

Entry mul(Entry a, Entry b) {
  Entry r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("matrix entry overflow in multiplication");
  return r;
}

Entry neg(Entry a) {
  Entry r;
  if (__builtin_sub_overflow(Entry{0}, a, &r)) throw OverflowError("matrix entry overflow in negation");
  return r;
}

}  // namespace checked

ExchangeMatrix::ExchangeMatrix(int n, int m, std::vector<Entry> entries, std::vector<Entry> symmetrizer)
    : n_(n), m_(m), entries_(std::move(entries)), symmetrizer_(std::move(symmetrizer)) {
  if (n < 1) throw InputError("exchange matrix needs at least one mutable vertex");
  if (m < 0) throw InputError("negative frozen vertex count");
  if (entries_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n + m))
    throw InputError("exchange matrix has " + std::to_string(entries_.size()) + " entries, expected " +
                     std::to_string(n * (n + m)));
  if (!symmetrizer_.empty()) {
    if (symmetrizer_.size() != static_cast<std::size_t>(n))
      throw InputError("symmetrizer must have one entry per mutable vertex");
    for (Entry d : symmetrizer_)
      if (d <= 0) throw InputError("symmetrizer entries must be positive");
    // All ones is the same as no symmetrizer.
    if (std::all_of(symmetrizer_.begin(), symmetrizer_.end(), [](Entry d) { return d == 1; }))
      symmetrizer_.clear();
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Entry lhs = checked::mul(weight(i), (*this)(i, j));
      Entry rhs = checked::neg(checked::mul(weight(j), (*this)(j, i)));
      if (lhs != rhs) {
        throw InputError("principal part is not skew-symmetrizable at (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ")");
      }
    }
  }
}

ExchangeMatrix ExchangeMatrix::from_rows(const std::vector<std::vector<Entry>>& rows,
                                         std::vector<Entry> symmetrizer) {
  if (rows.empty()) throw InputError("exchange matrix needs at least one row");
  const int n = static_cast<int>(rows.size());
  const std::size_t width = rows.front().size();
  if (width < rows.size()) throw InputError("exchange matrix must have at least n columns");
  std::vector<Entry> entries;
  entries.reserve(rows.size() * width);
  for (const auto& r : rows) {
    if (r.size() != width) throw InputError("ragged exchange matrix rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return ExchangeMatrix(n, static_cast<int>(width) - n, std::move(entries), std::move(symmetrizer));
}

std::vector<std::vector<Entry>> ExchangeMatrix::rows() const {
  std::vector<std::vector<Entry>> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    auto r = row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

std::string default_label(const ExchangeMatrix& b, int vertex) {
  const int n = b.mutable_count();
  if (vertex < n) return std::to_string(vertex + 1);
  return std::to_string(vertex - n + 1) + "'";
}

std::string IceQuiver::label(int vertex) const {
  if (static_cast<std::size_t>(vertex) < labels.size()) return labels[static_cast<std::size_t>(vertex)];
  return default_label(matrix, vertex);
}

std::vector<Arrow> arrows(const ExchangeMatrix& b) {
  std::vector<Arrow> out;
  const int n = b.mutable_count();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < b.columns(); ++j) {
      Entry v = b(i, j);
      if (v > 0) {
        out.push_back({i, j, v});
      } else if (v < 0 && j >= n) {
        out.push_back({j, i, -v});
      }
    }
  }
  return out;
}

ExchangeMatrix mutate(const ExchangeMatrix& b, int k) {
  const int n = b.mutable_count();
  const int cols = b.columns();
  if (k < 0 || k >= cols) throw InputError("mutation index " + std::to_string(k + 1) + " out of range");
  if (k >= n) throw InputError("cannot mutate at frozen vertex " + std::to_string(k + 1));

  std::vector<Entry> out(b.entries().begin(), b.entries().end());
  auto at = [&](int i, int j) -> Entry& { return out[static_cast<std::size_t>(i) * cols + j]; };
  const auto rk = b.row(k);
  for (int i = 0; i < n; ++i) {
    const Entry bik = b(i, k);
    if (i == k) {
      for (int j = 0; j < cols; ++j) at(i, j) = checked::neg(b(i, j));
      continue;
    }
    at(i, k) = checked::neg(bik);
    if (bik == 0) continue;
    for (int j = 0; j < cols; ++j) {
      if (j == k) continue;
      const Entry bkj = rk[static_cast<std::size_t>(j)];
      // sgn(b_ik) [b_ik b_kj]_+
      if (bik > 0 && bkj > 0) {
        at(i, j) = checked::add(at(i, j), checked::mul(bik, bkj));
      } else if (bik < 0 && bkj < 0) {
        at(i, j) = checked::add(at(i, j), checked::neg(checked::mul(bik, bkj)));
      }
    }
  }
  return ExchangeMatrix(ExchangeMatrix::Unchecked{}, n, b.frozen_count(), std::move(out), b.symmetrizer());
}

ExchangeMatrix permuted(const ExchangeMatrix& b, const Permutation& sigma) {
  const int n = b.mutable_count();
  const int cols = b.columns();
  if (sigma.size() != static_cast<std::size_t>(n) || !is_permutation(sigma))
    throw InputError("permutation does not match the mutable vertex count");
  std::vector<Entry> out(b.entries().size());
  for (int i = 0; i < n; ++i) {
    const std::size_t row = static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)]) * cols;
    for (int j = 0; j < n; ++j) out[row + static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)])] = b(i, j);
    for (int j = n; j < cols; ++j) out[row + static_cast<std::size_t>(j)] = b(i, j);
  }
  std::vector<Entry> d;
  if (b.has_symmetrizer()) {
    d.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] = b.weight(i);
  }
  return ExchangeMatrix(ExchangeMatrix::Unchecked{}, n, b.frozen_count(), std::move(out), std::move(d));
}

ExchangeMatrix principal_part(const ExchangeMatrix& b) {
  const int n = b.mutable_count();
  std::vector<Entry> out;
  out.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    auto r = b.row(i);
    out.insert(out.end(), r.begin(), r.begin() + n);
  }
  return ExchangeMatrix(n, 0, std::move(out), b.symmetrizer());
}

namespace {

ExchangeMatrix with_frame(const ExchangeMatrix& q, Entry sign, const char* what) {
  if (q.frozen_count() != 0) throw InputError(std::string(what) + " needs a quiver without frozen vertices");
  const int n = q.mutable_count();
  std::vector<Entry> out(static_cast<std::size_t>(n) * 2 * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(i) * 2 * n + j] = q(i, j);
    out[static_cast<std::size_t>(i) * 2 * n + n + i] = sign;
  }
  return ExchangeMatrix(n, n, std::move(out), q.symmetrizer());
}

}  // namespace

ExchangeMatrix framed(const ExchangeMatrix& q) { return with_frame(q, 1, "framed"); }

ExchangeMatrix coframed(const ExchangeMatrix& q) { return with_frame(q, -1, "coframed"); }

ExchangeMatrix opposite(const ExchangeMatrix& q) {
  if (q.frozen_count() != 0) throw InputError("opposite needs a quiver without frozen vertices");
  const int n = q.mutable_count();
  std::vector<Entry> out(static_cast<std::size_t>(n) * n);
  // -B keeps the same symmetrizer and commutes with mutation: mu_k(-B) = -mu_k(B).
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(i) * n + j] = checked::neg(q(i, j));
  return ExchangeMatrix(n, 0, std::move(out), q.symmetrizer());
}

bool is_acyclic(const ExchangeMatrix& q) {
  const int n = q.mutable_count();
  std::vector<int> indegree(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (q(i, j) > 0) ++indegree[static_cast<std::size_t>(j)];
  std::vector<int> ready;
  for (int i = 0; i < n; ++i)
    if (indegree[static_cast<std::size_t>(i)] == 0) ready.push_back(i);
  int removed = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++removed;
    for (int j = 0; j < n; ++j)
      if (q(v, j) > 0 && --indegree[static_cast<std::size_t>(j)] == 0) ready.push_back(j);
  }
  return removed == n;
}

BigInt CMatrix::determinant() const {
  // Fraction-free Gaussian elimination (Bareiss).
  const int n = n_;
  std::vector<BigInt> a(entries_.begin(), entries_.end());
  auto at = [&](int i, int j) -> BigInt& { return a[static_cast<std::size_t>(i) * n + j]; };
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i) {
        if (at(i, k) != 0) {
          swap = i;
          break;
        }
      }
      if (swap < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

CMatrix c_matrix(const ExchangeMatrix& r) {
  const int n = r.mutable_count();
  if (r.frozen_count() != n) throw InputError("c-matrix needs exactly n frozen vertices");
  std::vector<Entry> out;
  out.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    auto f = r.frozen_row(i);
    out.insert(out.end(), f.begin(), f.end());
  }
  return CMatrix(n, std::move(out));
}

VertexColor vertex_color(const ExchangeMatrix& r, int i) {
  if (i < 0 || i >= r.mutable_count()) throw InputError("vertex " + std::to_string(i + 1) + " out of range");
  bool positive = false;
  bool negative = false;
  for (Entry v : r.frozen_row(i)) {
    positive |= v > 0;
    negative |= v < 0;
  }
  if (positive && !negative) return VertexColor::Green;
  if (negative && !positive) return VertexColor::Red;
  std::string row;
  for (Entry v : r.frozen_row(i)) row += (row.empty() ? "" : ",") + std::to_string(v);
  throw SignIncoherentError(i, "c-vector of vertex " + std::to_string(i + 1) + " is " +
                                   (positive ? "mixed-sign" : "zero") + ": (" + row + ")");
}

std::vector<VertexColor> vertex_colors(const ExchangeMatrix& r) {
  std::vector<VertexColor> out;
  out.reserve(static_cast<std::size_t>(r.mutable_count()));
  for (int i = 0; i < r.mutable_count(); ++i) out.push_back(vertex_color(r, i));
  return out;
}

std::vector<int> green_vertices(const ExchangeMatrix& r) {
  std::vector<int> out;
  for (int i = 0; i < r.mutable_count(); ++i)
    if (vertex_color(r, i) == VertexColor::Green) out.push_back(i);
  return out;
}

int green_count(const ExchangeMatrix& r) { return static_cast<int>(green_vertices(r).size()); }

}  // namespace greenseq
