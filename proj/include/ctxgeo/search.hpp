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

#ifndef CTXGEO_SEARCH_HPP
#define CTXGEO_SEARCH_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ctxgeo/analysis.hpp"
#include "ctxgeo/geometry.hpp"

namespace ctxgeo {

inline constexpr int kMaxSearchQubits = 8;

struct SearchProgress {
  std::uint64_t nodes_explored = 0;
  int depth = 0;
  std::size_t solutions = 0;
  double elapsed_seconds = 0.0;
};

struct SearchConfig {
  int n_qubits = 2;
  std::size_t max_solutions = 1;
  bool require_contextual = true;
  std::chrono::duration<double> time_budget = std::chrono::seconds(60);
  /// Randomizes branch order; unset keeps the natural (deterministic) order.
  std::optional<std::uint64_t> seed;
  /// Fix the first context to a canonical isotropic tuple.
  bool symmetry_reduction = true;
  bool allow_duplicates = false;
  int threads = 1;
  std::function<void(const SearchProgress&)> on_progress;
  std::uint64_t progress_interval = 1u << 20;
};

struct RealizationResult {
  std::vector<Labeling> solutions;
  std::uint64_t nodes_explored = 0;
  /// The whole (pruned) tree was traversed.
  bool exhausted = false;
  bool timed_out = false;
};

/// Depth-first search for Pauli labelings satisfying postulates 1'-4 (and 5 when
/// require_contextual). Operators are the + representatives of their symplectic vectors.
RealizationResult find_realization(const TwoContextGeometry& g, const SearchConfig& cfg);

/// Verifies the labeling stored with a catalog entry. Throws std::out_of_range for unknown
/// names and std::invalid_argument for entries without a labeling.
VerificationReport replay_catalog_labeling(const std::string& name);

}  // namespace ctxgeo

#endif  // CTXGEO_SEARCH_HPP
