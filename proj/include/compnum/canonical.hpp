// Copyright 2026 The compnum Authors
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

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "compnum/error.hpp"
#include "compnum/graph.hpp"

namespace compnum {

inline constexpr std::size_t kMaxCanonicalVertices = 8;

namespace detail {

// Pairs in column order (0,1),(0,2),(1,2),(0,3),... so that the code prefix
// is fixed once the first j+1 positions are labeled.
inline std::size_t column_pair_bit(std::size_t i, std::size_t j) { return j * (j - 1) / 2 + i; }

class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g), n_(g.n()) {
    std::vector<Vertex> byDegree(n_);
    for (Vertex v = 0; v < n_; ++v) byDegree[v] = v;
    std::stable_sort(byDegree.begin(), byDegree.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    for (std::size_t i = 0; i < n_; ++i) slotDegree_.push_back(g.degree(byDegree[i]));
    total_bits_ = n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2;
  }

  std::uint32_t run() {
    order_.assign(n_, 0);
    used_.assign(n_, false);
    found_ = false;
    search(0, 0);
    return best_;
  }

 private:
  // Bits are stored most-significant-first so integer comparison matches
  // lexicographic comparison of the column-ordered bit string.
  std::uint32_t bit_value(std::size_t i, std::size_t j) const {
    return std::uint32_t{1} << (total_bits_ - 1 - column_pair_bit(i, j));
  }

  void search(std::size_t pos, std::uint32_t code) {
    if (pos == n_) {
      if (!found_ || code < best_) {
        best_ = code;
        found_ = true;
      }
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v] || g_.degree(v) != slotDegree_[pos]) continue;
      std::uint32_t next = code;
      for (std::size_t i = 0; i < pos; ++i)
        if (g_.adjacent(order_[i], v)) next |= bit_value(i, pos);
      if (found_ && pos > 0) {
        // Compare the fixed prefix (columns 1..pos) against the incumbent.
        std::size_t known = column_pair_bit(pos - 1, pos) + 1;
        std::uint32_t mask = known >= 32 ? ~std::uint32_t{0}
                                          : ~((std::uint32_t{1} << (total_bits_ - known)) - 1);
        if ((next & mask) > (best_ & mask)) continue;
      }
      used_[v] = true;
      order_[pos] = v;
      search(pos + 1, next);
      used_[v] = false;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t total_bits_ = 0;
  std::vector<std::size_t> slotDegree_;
  std::vector<Vertex> order_;
  std::vector<bool> used_;
  std::uint32_t best_ = 0;
  bool found_ = false;
};

}  // namespace detail

/// Isomorphism-invariant byte string: vertex count followed by the minimum
/// adjacency bit string over all degree-sorted relabelings. Equal strings iff
/// the graphs are isomorphic. Throws UnsupportedSize for n > 8.
inline std::string canonical_form(const Graph& g) {
  if (g.n() > kMaxCanonicalVertices)
    throw UnsupportedSize("canonical_form supports at most " + std::to_string(kMaxCanonicalVertices) +
                          " vertices, got " + std::to_string(g.n()));
  std::uint32_t code = detail::Canonicalizer(g).run();
  std::string out;
  out.push_back(static_cast<char>(g.n()));
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<char>((code >> shift) & 0xFF));
  return out;
}

/// The canonical representative encoded by a canonical_form string.
inline Graph graph_from_canonical(const std::string& form) {
  if (form.size() != 5) throw MalformedInput("canonical form must be 5 bytes");
  std::size_t n = static_cast<unsigned char>(form[0]);
  if (n > kMaxCanonicalVertices) throw MalformedInput("canonical form vertex count out of range");
  std::uint32_t code = 0;
  for (std::size_t i = 1; i < 5; ++i) code = (code << 8) | static_cast<unsigned char>(form[i]);
  std::size_t total = n * (n - (n > 0 ? 1 : 0)) / 2;
  EdgeList edges;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (code >> (total - 1 - detail::column_pair_bit(i, j)) & 1U) edges.emplace_back(i, j);
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace compnum
