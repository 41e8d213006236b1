// Copyright 2026 The ctxgeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact planarity for small graphs: reduce, apply the Euler bound, then search for a
// subdivision of K5 or K3,3 (Kuratowski) by backtracking over internally disjoint paths.

#include <array>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "ctxgeo/analysis.hpp"

namespace ctxgeo {

namespace {

using Mask = std::uint32_t;

struct SimpleGraph {
  int n = 0;
  std::array<Mask, kMaxPlanarVertices> adj{};
  Mask alive = 0;

  int degree(int v) const { return std::popcount(adj[v] & alive); }
  int edges() const {
    int e = 0;
    for (int v = 0; v < n; ++v)
      if (alive & (1U << v)) e += degree(v);
    return e / 2;
  }
  void add_edge(int a, int b) {
    adj[a] |= 1U << b;
    adj[b] |= 1U << a;
  }
  void remove_vertex(int v) {
    alive &= ~(1U << v);
    for (int u = 0; u < n; ++u) adj[u] &= ~(1U << v);
    adj[v] = 0;
  }
};

// Drops vertices of degree <= 1 and smooths degree-2 vertices; planarity is unchanged.
void reduce(SimpleGraph& g) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.n; ++v) {
      if (!(g.alive & (1U << v))) continue;
      int d = g.degree(v);
      if (d <= 1) {
        g.remove_vertex(v);
        changed = true;
      } else if (d == 2) {
        Mask nb = g.adj[v] & g.alive;
        int a = std::countr_zero(nb);
        int b = std::countr_zero(nb & (nb - 1));
        g.remove_vertex(v);
        g.add_edge(a, b);
        changed = true;
      }
    }
  }
}

class SubdivisionSearch {
 public:
  explicit SubdivisionSearch(const SimpleGraph& g) : g_(g) {}

  bool find_k5() {
    std::vector<int> cand;
    for (int v = 0; v < g_.n; ++v)
      if ((g_.alive & (1U << v)) && g_.degree(v) >= 4) cand.push_back(v);
    std::vector<int> pick;
    return choose(cand, 0, 5, pick, [&](const std::vector<int>& b) {
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) pairs.emplace_back(b[i], b[j]);
      return connect(b, pairs);
    });
  }

  bool find_k33() {
    std::vector<int> cand;
    for (int v = 0; v < g_.n; ++v)
      if ((g_.alive & (1U << v)) && g_.degree(v) >= 3) cand.push_back(v);
    std::vector<int> pick;
    return choose(cand, 0, 6, pick, [&](const std::vector<int>& six) {
      // Split six into {six[0], x, y} vs the rest.
      for (int x = 1; x < 6; ++x) {
        for (int y = x + 1; y < 6; ++y) {
          std::vector<int> left{six[0], six[x], six[y]}, right;
          for (int k = 1; k < 6; ++k)
            if (k != x && k != y) right.push_back(six[k]);
          std::vector<std::pair<int, int>> pairs;
          for (int a : left)
            for (int b : right) pairs.emplace_back(a, b);
          if (connect(six, pairs)) return true;
        }
      }
      return false;
    });
  }

 private:
  template <typename F>
  bool choose(const std::vector<int>& cand, std::size_t from, std::size_t k, std::vector<int>& pick, F&& test) {
    if (pick.size() == k) return test(pick);
    for (std::size_t i = from; i + (k - pick.size()) <= cand.size(); ++i) {
      pick.push_back(cand[i]);
      if (choose(cand, i + 1, k, pick, test)) return true;
      pick.pop_back();
    }
    return false;
  }

  bool connect(const std::vector<int>& branch, const std::vector<std::pair<int, int>>& pairs) {
    Mask used = 0;
    for (int b : branch) used |= 1U << b;
    branch_ = used;
    return route(pairs, 0, used);
  }

  // Routes pairs[idx..] with internal vertices outside `used`.
  bool route(const std::vector<std::pair<int, int>>& pairs, std::size_t idx, Mask used) {
    if (idx == pairs.size()) return true;
    auto [s, t] = pairs[idx];
    return extend(pairs, idx, s, t, used);
  }

  bool extend(const std::vector<std::pair<int, int>>& pairs, std::size_t idx, int at, int target, Mask used) {
    Mask nb = g_.adj[at] & g_.alive;
    if (nb & (1U << target)) {
      if (route(pairs, idx + 1, used)) return true;
    }
    Mask free = nb & ~used & ~branch_;
    while (free) {
      int v = std::countr_zero(free);
      free &= free - 1;
      if (extend(pairs, idx, v, target, used | (1U << v))) return true;
    }
    return false;
  }

  const SimpleGraph& g_;
  Mask branch_ = 0;
};

}  // namespace

bool is_planar(const DualMultigraph& mg) {
  if (mg.num_vertices > kMaxPlanarVertices) {
    throw SizeLimitExceeded("planarity test supports at most " + std::to_string(kMaxPlanarVertices) + " vertices");
  }
  SimpleGraph g;
  g.n = mg.num_vertices;
  g.alive = g.n == 32 ? ~Mask{0} : ((Mask{1} << g.n) - 1);
  for (auto [a, b] : mg.edges) {
    if (a == b) continue;
    g.add_edge(a, b);
  }
  reduce(g);
  int v = std::popcount(g.alive);
  if (v >= 3 && g.edges() > 3 * v - 6) return false;
  SubdivisionSearch search(g);
  return !search.find_k5() && !search.find_k33();
}

}  // namespace ctxgeo
