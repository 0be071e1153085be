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
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace greenseq {

using Entry = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

// A permutation of mutable vertices, perm[i] is the image of i. Vertices are
// zero-based everywhere in the C++ API; text formats use one-based labels.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
Permutation inverse(const Permutation& p);
// (a ∘ b)(i) = a(b(i))
Permutation compose(const Permutation& a, const Permutation& b);
bool is_permutation(const Permutation& p);

namespace checked {
Entry add(Entry a, Entry b);
Entry mul(Entry a, Entry b);
Entry neg(Entry a);
}  // namespace checked

// An n x (n+m) integer matrix. Columns 0..n-1 form the principal part, columns
// n..n+m-1 are frozen vertices (frozen vertex i' is column n+i). The principal
// part must be skew-symmetric, or skew-symmetrizable by the attached
// symmetrizer d (d_i * b_ij == -d_j * b_ji).
class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;
  // Throws InputError when the shape or skew-symmetrizability check fails.
  ExchangeMatrix(int n, int m, std::vector<Entry> entries,
                 std::vector<Entry> symmetrizer = {});

  static ExchangeMatrix from_rows(const std::vector<std::vector<Entry>>& rows,
                                  std::vector<Entry> symmetrizer = {});

  int mutable_count() const { return n_; }
  int frozen_count() const { return m_; }
  int columns() const { return n_ + m_; }

  Entry operator()(int i, int j) const { return entries_[index(i, j)]; }
  std::span<const Entry> row(int i) const {
    return {entries_.data() + static_cast<std::size_t>(i) * columns(),
            static_cast<std::size_t>(columns())};
  }
  // Frozen block of row i; the c-vector when the matrix is framed.
  std::span<const Entry> frozen_row(int i) const { return row(i).subspan(n_); }
  std::span<const Entry> entries() const { return entries_; }

  bool has_symmetrizer() const { return !symmetrizer_.empty(); }
  // Empty when the principal part is skew-symmetric without weights.
  const std::vector<Entry>& symmetrizer() const { return symmetrizer_; }
  // d_i, or 1 when no symmetrizer is attached.
  Entry weight(int i) const { return symmetrizer_.empty() ? 1 : symmetrizer_[i]; }

  std::vector<std::vector<Entry>> rows() const;

  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;

 private:
  friend ExchangeMatrix mutate(const ExchangeMatrix& b, int k);
  friend ExchangeMatrix permuted(const ExchangeMatrix& b, const Permutation& sigma);
  struct Unchecked {};
  ExchangeMatrix(Unchecked, int n, int m, std::vector<Entry> entries,
                 std::vector<Entry> symmetrizer)
      : n_(n), m_(m), entries_(std::move(entries)), symmetrizer_(std::move(symmetrizer)) {}

  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * columns() + static_cast<std::size_t>(j);
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<Entry> entries_;
  std::vector<Entry> symmetrizer_;
};

// Ice quiver: an exchange matrix plus display names for its n+m vertices.
struct IceQuiver {
  ExchangeMatrix matrix;
  std::vector<std::string> labels;  // empty means default labels

  std::string label(int vertex) const;
};

// "1".."n" for mutable vertices, "1'".."n'" for frozen ones.
std::string default_label(const ExchangeMatrix& b, int vertex);

struct Arrow {
  int from;
  int to;
  Entry multiplicity;
};

// Arrow-list view: one entry per ordered pair with b_ij > 0 (i mutable),
// plus frozen-to-mutable arrows for negative frozen entries.
std::vector<Arrow> arrows(const ExchangeMatrix& b);

// Matrix mutation in direction k (zero-based, mutable). Throws InputError for
// out-of-range or frozen k and OverflowError when an entry leaves int64.
ExchangeMatrix mutate(const ExchangeMatrix& b, int k);

// σ·B: mutable vertex i is renamed σ(i); frozen columns stay in place.
ExchangeMatrix permuted(const ExchangeMatrix& b, const Permutation& sigma);

// Principal part only (m = 0).
ExchangeMatrix principal_part(const ExchangeMatrix& b);

ExchangeMatrix framed(const ExchangeMatrix& q);
ExchangeMatrix coframed(const ExchangeMatrix& q);
// All arrows reversed (transpose-negate of the principal part). Requires m = 0.
ExchangeMatrix opposite(const ExchangeMatrix& q);

bool is_acyclic(const ExchangeMatrix& q);

class CMatrix {
 public:
  CMatrix(int n, std::vector<Entry> entries) : n_(n), entries_(std::move(entries)) {}
  int size() const { return n_; }
  Entry operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
  std::span<const Entry> row(int i) const {
    return {entries_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)};
  }
  BigInt determinant() const;
  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  int n_;
  std::vector<Entry> entries_;
};

// Right n x n block. Throws InputError unless m == n.
CMatrix c_matrix(const ExchangeMatrix& r);

enum class VertexColor { Green, Red };

// Green iff the frozen row is nonzero and >= 0, Red iff nonzero and <= 0.
// Anything else raises SignIncoherentError.
VertexColor vertex_color(const ExchangeMatrix& r, int i);
std::vector<VertexColor> vertex_colors(const ExchangeMatrix& r);
std::vector<int> green_vertices(const ExchangeMatrix& r);
int green_count(const ExchangeMatrix& r);

}  // namespace greenseq
