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

#include <algorithm>
#include <atomic>
#include <optional>
#include <stdexcept>
#include <thread>

#include "ctxgeo/analysis.hpp"

namespace ctxgeo {

std::vector<CensusEntry> contextuality_census(int max_points, int threads) {
  if (max_points > kMaxCensusPoints) {
    throw std::invalid_argument("census supports at most " + std::to_string(kMaxCensusPoints) + " points");
  }
  std::vector<std::pair<ParameterSet, TwoContextGeometry>> work;
  for (const auto& ps : admissible_parameter_sets(max_points)) {
    for (auto& g : enumerate_geometries(ps.contexts, ps.context_size)) work.emplace_back(ps, std::move(g));
  }
  std::sort(work.begin(), work.end(), [](const auto& a, const auto& b) {
    if (a.first.points() != b.first.points()) return a.first.points() < b.first.points();
    return a.first.contexts < b.first.contexts;
  });

  std::vector<std::optional<CensusEntry>> slots(work.size());
  auto evaluate = [&](std::size_t i) {
    const auto& [ps, g] = work[i];
    slots[i] = CensusEntry{ps, g, parity_analysis(g), is_planar(dual_multigraph(g))};
  };

  threads = std::max(1, threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < work.size(); ++i) evaluate(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < work.size(); i = next++) evaluate(i);
      });
    }
  }

  std::vector<CensusEntry> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace ctxgeo
