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

// Parity analysis over GF(2).
//
// For observables A_i with symplectic vectors v_i, the product of all context products
// equals the concatenated word, which collapses to (-1)^S Id with S the sum of
// g_ij = <v_i, v_j> over interleaving pairs. Commutation inside contexts fixes some g_ij
// to zero, and each context relation sum_{i in c} v_i = 0 gives sum_{i in c} g_ik = 0 for
// every k. S is forced to 0 exactly when it lies in the span of those relations.

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ctxgeo/analysis.hpp"

namespace ctxgeo {

const char* to_string(Verdict v) { return v == Verdict::Forced ? "forced" : "contingent"; }

int GramSystem::variable_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = std::lower_bound(variables.begin(), variables.end(), std::make_pair(i, j));
  if (it == variables.end() || *it != std::make_pair(i, j)) return -1;
  return static_cast<int>(it - variables.begin());
}

GramSystem build_gram_system(const TwoContextGeometry& g) {
  GramSystem sys;
  sys.num_points = g.num_points();
  const int m = g.num_points();
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (!g.share_context(i, j)) sys.variables.emplace_back(i, j);
  const std::size_t nv = sys.variables.size();

  for (int c = 0; c < g.num_contexts(); ++c) {
    const auto& ctx = g.context(c);
    for (int k = 1; k <= m; ++k) {
      if (std::find(ctx.begin(), ctx.end(), k) != ctx.end()) continue;
      gf2::BitRow row(nv);
      for (int i : ctx) {
        int v = sys.variable_index(i, k);
        if (v >= 0) row.flip(static_cast<std::size_t>(v));
      }
      if (!row.any()) continue;
      sys.constraints.push_back(std::move(row));
      sys.constraint_labels.push_back({c, k});
    }
  }

  std::vector<std::vector<int>> pos(static_cast<std::size_t>(m) + 1);
  int t = 0;
  for (const auto& ctx : g.contexts())
    for (int pt : ctx) pos[pt].push_back(t++);
  sys.target = gf2::BitRow(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    auto [i, j] = sys.variables[v];
    int a0 = pos[i][0], a1 = pos[i][1], b0 = pos[j][0], b1 = pos[j][1];
    bool interleave = (a0 < b0 && b0 < a1 && a1 < b1) || (b0 < a0 && a0 < b1 && b1 < a1);
    if (interleave) sys.target.set(v);
  }
  return sys;
}

ParityVerdict parity_analysis(const TwoContextGeometry& g) {
  GramSystem sys = build_gram_system(g);
  const std::size_t nv = sys.variables.size();
  gf2::EchelonBasis basis(nv, std::max<std::size_t>(sys.constraints.size(), 1));
  for (std::size_t r = 0; r < sys.constraints.size(); ++r) basis.insert(sys.constraints[r], r);

  ParityVerdict out;
  out.num_variables = static_cast<int>(nv);
  out.constraint_rank = static_cast<int>(basis.rank());
  if (auto combo = basis.express(sys.target)) {
    out.verdict = Verdict::Forced;
    for (std::size_t r = 0; r < sys.constraints.size(); ++r)
      if (combo->get(r)) out.relations.push_back(sys.constraint_labels[r]);
    return out;
  }
  out.verdict = Verdict::Contingent;
  for (const auto& v : basis.null_space()) {
    if (v.dot(sys.target)) {
      for (std::size_t k = 0; k < nv; ++k)
        if (v.get(k)) out.anticommuting_pairs.push_back(sys.variables[k]);
      return out;
    }
  }
  throw std::logic_error("target outside the row space but orthogonal to the null space");
}

bool check_certificate(const TwoContextGeometry& g, const ParityVerdict& v) {
  GramSystem sys = build_gram_system(g);
  const std::size_t nv = sys.variables.size();
  if (v.verdict == Verdict::Forced) {
    std::map<std::pair<int, int>, std::size_t> index;
    for (std::size_t r = 0; r < sys.constraint_labels.size(); ++r)
      index[{sys.constraint_labels[r].context, sys.constraint_labels[r].point}] = r;
    gf2::BitRow sum(nv);
    for (const auto& rel : v.relations) {
      auto it = index.find({rel.context, rel.point});
      if (it == index.end()) return false;
      sum ^= sys.constraints[it->second];
    }
    return sum == sys.target;
  }
  gf2::BitRow assignment(nv);
  for (auto [i, j] : v.anticommuting_pairs) {
    int k = sys.variable_index(i, j);
    if (k < 0) return false;
    assignment.flip(static_cast<std::size_t>(k));
  }
  for (const auto& row : sys.constraints)
    if (row.dot(assignment)) return false;
  return assignment.dot(sys.target);
}

}  // namespace ctxgeo
