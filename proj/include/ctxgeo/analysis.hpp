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

#ifndef CTXGEO_ANALYSIS_HPP
#define CTXGEO_ANALYSIS_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ctxgeo/geometry.hpp"
#include "ctxgeo/gf2.hpp"
#include "ctxgeo/pauli.hpp"

namespace ctxgeo {

/// Point id (1-based) -> observable.
using Labeling = std::map<int, PauliObservable>;

Labeling parse_labeling(const std::map<int, std::string>& strings);

class LabelingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PostulateResults {
  bool commuting_contexts = true;  // 1': each context mutually commutes
  bool observables = true;         // 2: Hermitian, squares to identity, not the identity
  bool two_contexts = true;        // 3': every point on exactly two contexts
  bool identity_products = true;   // 4: each context multiplies to +-Id
  bool odd_negative = false;       // 5: odd number of -Id contexts

  bool first_four() const { return commuting_contexts && observables && two_contexts && identity_products; }
};

struct VerificationReport {
  /// +1 / -1 per context; 0 where the product is undefined.
  std::vector<int> per_context_sign;
  int negative_count = 0;
  PostulateResults postulates;
  bool distinct_labels = true;
  bool is_contextual = false;
  /// Human-readable failure details, e.g. "NonCommutingPair context 2: points 4 and 7".
  std::vector<std::string> failures;

  std::vector<int> negative_contexts() const;
};

struct VerifyOptions {
  bool require_distinct = true;
};

/// Throws LabelingMismatch on missing labels or mixed qubit counts.
VerificationReport verify_labeling(const TwoContextGeometry& g, const Labeling& lab, VerifyOptions opts = {});

/// Linear system on the Gram values g_ij = <v_i, v_j> of a hypothetical labeling.
///
/// Variables: unordered point pairs that share no context. Constraints: for each context c
/// and each point k, sum_{i in c} g_ik = 0. Target: S = sum of g_ij over the pairs whose
/// occurrences interleave in the word formed by concatenating the contexts; the product of
/// all context signs equals (-1)^S.
struct GramSystem {
  struct Constraint {
    int context;  // 0-based
    int point;    // 1-based
  };

  int num_points = 0;
  std::vector<std::pair<int, int>> variables;  // (i, j), i < j, 1-based
  std::vector<Constraint> constraint_labels;
  std::vector<gf2::BitRow> constraints;
  gf2::BitRow target;

  int variable_index(int i, int j) const;
};

GramSystem build_gram_system(const TwoContextGeometry& g);

enum class Verdict { Forced, Contingent };

const char* to_string(Verdict v);

struct ParityVerdict {
  Verdict verdict = Verdict::Forced;
  /// Forced: constraints whose sum equals the target functional.
  std::vector<GramSystem::Constraint> relations;
  /// Contingent: anticommuting pairs of a Gram assignment with odd parity.
  std::vector<std::pair<int, int>> anticommuting_pairs;
  int num_variables = 0;
  int constraint_rank = 0;
};

ParityVerdict parity_analysis(const TwoContextGeometry& g);

/// Re-checks a certificate against an independently rebuilt Gram system.
bool check_certificate(const TwoContextGeometry& g, const ParityVerdict& v);

inline constexpr int kMaxPlanarVertices = 12;

/// Planarity of the underlying simple graph. Throws SizeLimitExceeded above kMaxPlanarVertices.
bool is_planar(const DualMultigraph& mg);

struct CensusEntry {
  ParameterSet params;
  TwoContextGeometry geometry;
  ParityVerdict verdict;
  bool planar = false;
};

inline constexpr int kMaxCensusPoints = 16;

/// Every geometry of every admissible (l,p) with at most max_points points, ordered by
/// parameters then canonical form. `threads` > 1 evaluates geometries concurrently.
std::vector<CensusEntry> contextuality_census(int max_points, int threads = 1);

}  // namespace ctxgeo

#endif  // CTXGEO_ANALYSIS_HPP
