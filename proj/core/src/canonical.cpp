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

#include "greenseq/canonical.hpp"

#include <algorithm>
#include <cstdio>
#include <tuple>
#include <vector>

namespace greenseq {
namespace {

using Signature = std::vector<Entry>;

// Replaces each vertex's signature by its rank among distinct signatures.
// Returns the number of distinct values.
int rank_signatures(const std::vector<Signature>& sig, std::vector<int>& cell) {
  const std::size_t n = sig.size();
  std::vector<int> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)];
  });
  int rank = -1;
  const Signature* prev = nullptr;
  for (int v : order) {
    const Signature& s = sig[static_cast<std::size_t>(v)];
    if (prev == nullptr || *prev != s) ++rank;
    cell[static_cast<std::size_t>(v)] = rank;
    prev = &s;
  }
  return rank + 1;
}

class Canonicalizer {
 public:
  explicit Canonicalizer(const ExchangeMatrix& r) : r_(r), n_(r.mutable_count()) {}

  CanonicalKey run() {
    std::vector<Signature> sig(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      Signature& s = sig[static_cast<std::size_t>(i)];
      s.push_back(r_.weight(i));
      auto f = r_.frozen_row(i);
      s.insert(s.end(), f.begin(), f.end());
    }
    std::vector<int> cell(static_cast<std::size_t>(n_));
    int cells = rank_signatures(sig, cell);
    search(std::move(cell), cells);

    CanonicalKey key;
    key.perm = best_perm_;
    key.rigid = rigid_;
    key.bytes = serialize(best_);
    return key;
  }

 private:
  // Splits cells by the multiset of (cell_j, b_ij, b_ji) until stable.
  int refine(std::vector<int>& cell, int cells) const {
    std::vector<Signature> sig(static_cast<std::size_t>(n_));
    std::vector<std::tuple<int, Entry, Entry>> nbrs;
    while (cells < n_) {
      for (int i = 0; i < n_; ++i) {
        nbrs.clear();
        for (int j = 0; j < n_; ++j) {
          if (j == i) continue;
          const Entry out = r_(i, j);
          const Entry in = r_(j, i);
          if (out != 0 || in != 0) nbrs.emplace_back(cell[static_cast<std::size_t>(j)], out, in);
        }
        std::sort(nbrs.begin(), nbrs.end());
        Signature& s = sig[static_cast<std::size_t>(i)];
        s.clear();
        s.push_back(cell[static_cast<std::size_t>(i)]);
        for (const auto& [c, out, in] : nbrs) {
          s.push_back(c);
          s.push_back(out);
          s.push_back(in);
        }
      }
      const int next = rank_signatures(sig, cell);
      if (next == cells) break;
      cells = next;
    }
    return cells;
  }

  void search(std::vector<int> cell, int cells) {
    cells = refine(cell, cells);
    if (cells == n_) {
      leaf(cell);
      return;
    }
    // First non-singleton cell.
    std::vector<int> count(static_cast<std::size_t>(cells), 0);
    for (int c : cell) ++count[static_cast<std::size_t>(c)];
    int target = 0;
    while (count[static_cast<std::size_t>(target)] < 2) ++target;
    for (int v = 0; v < n_; ++v) {
      if (cell[static_cast<std::size_t>(v)] != target) continue;
      std::vector<int> child(cell.size());
      for (int u = 0; u < n_; ++u) {
        const int c = cell[static_cast<std::size_t>(u)];
        // v goes first within its former cell, the rest follow.
        child[static_cast<std::size_t>(u)] = 2 * c + ((c == target && u != v) ? 1 : 0);
      }
      std::vector<Signature> sig(static_cast<std::size_t>(n_));
      for (int u = 0; u < n_; ++u) sig[static_cast<std::size_t>(u)] = {child[static_cast<std::size_t>(u)]};
      const int child_cells = rank_signatures(sig, child);
      search(std::move(child), child_cells);
    }
  }

  void leaf(const std::vector<int>& cell) {
    Permutation perm(cell.begin(), cell.end());
    std::vector<Entry> image = flatten(permuted(r_, perm));
    if (!have_best_ || image < best_) {
      best_ = std::move(image);
      best_perm_ = std::move(perm);
      have_best_ = true;
      rigid_ = true;
    } else if (image == best_ && perm != best_perm_) {
      rigid_ = false;
    }
  }

  std::vector<Entry> flatten(const ExchangeMatrix& m) const {
    std::vector<Entry> out;
    out.reserve(static_cast<std::size_t>(n_) * (m.columns() + 1));
    for (int i = 0; i < n_; ++i) out.push_back(m.weight(i));
    out.insert(out.end(), m.entries().begin(), m.entries().end());
    return out;
  }

  std::string serialize(const std::vector<Entry>& flat) const {
    std::string out;
    out.reserve(flat.size() + 8);
    auto put = [&out](std::uint64_t v) {
      do {
        std::uint8_t byte = v & 0x7f;
        v >>= 7;
        if (v != 0) byte |= 0x80;
        out.push_back(static_cast<char>(byte));
      } while (v != 0);
    };
    put(static_cast<std::uint64_t>(n_));
    put(static_cast<std::uint64_t>(r_.frozen_count()));
    for (Entry e : flat) {
      // zigzag
      put((static_cast<std::uint64_t>(e) << 1) ^ static_cast<std::uint64_t>(e >> 63));
    }
    return out;
  }

  const ExchangeMatrix& r_;
  int n_;
  bool have_best_ = false;
  bool rigid_ = true;
  std::vector<Entry> best_;
  Permutation best_perm_;
};

}  // namespace

CanonicalKey canonical_key(const ExchangeMatrix& r) { return Canonicalizer(r).run(); }

ExchangeMatrix canonical_form(const ExchangeMatrix& r) { return permuted(r, canonical_key(r).perm); }

std::optional<Permutation> find_isomorphism(const ExchangeMatrix& a, const ExchangeMatrix& b) {
  if (a.mutable_count() != b.mutable_count() || a.frozen_count() != b.frozen_count()) return std::nullopt;
  const CanonicalKey ka = canonical_key(a);
  const CanonicalKey kb = canonical_key(b);
  if (ka.bytes != kb.bytes) return std::nullopt;
  return compose(inverse(kb.perm), ka.perm);
}

std::uint64_t short_hash(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string short_hash_hex(const std::string& bytes) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(short_hash(bytes)));
  return buf;
}

}  // namespace greenseq
