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

#ifndef CTXGEO_GEOMETRY_HPP
#define CTXGEO_GEOMETRY_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ctxgeo {

/// Unchecked point/context incidence data. Point ids are 1-based.
struct GeometryData {
  int num_points = 0;
  std::vector<std::vector<int>> contexts;

  friend bool operator==(const GeometryData&, const GeometryData&) = default;
};

enum class ViolationKind {
  Empty,
  NonUniformContextSize,
  ContextTooSmall,
  PointOutOfRange,
  RepeatedPointInContext,
  PointDegree,
  IntersectionBound,
  PointCount,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
  std::vector<int> contexts;  // 0-based context indices involved
  std::vector<int> points;    // 1-based point ids involved
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

ValidationReport validate(const GeometryData& g);

class InvalidGeometry : public std::invalid_argument {
 public:
  explicit InvalidGeometry(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// A validated (l,p) 2-context-geometry: every point on exactly two contexts.
/// Context order and within-context point order are kept as given.
class TwoContextGeometry {
 public:
  /// Throws InvalidGeometry when validation fails.
  static TwoContextGeometry make(GeometryData data);

  int num_points() const { return data_.num_points; }
  int num_contexts() const { return static_cast<int>(data_.contexts.size()); }
  int context_size() const { return static_cast<int>(data_.contexts.front().size()); }
  const std::vector<std::vector<int>>& contexts() const { return data_.contexts; }
  const std::vector<int>& context(int c) const { return data_.contexts[c]; }
  const GeometryData& data() const { return data_; }

  /// The two (0-based) contexts through point `point` (1-based), in increasing order.
  std::pair<int, int> contexts_of(int point) const { return point_contexts_[point - 1]; }

  bool share_context(int a, int b) const;

  /// Same geometry with every context sorted by point id.
  TwoContextGeometry normalized() const;

  friend bool operator==(const TwoContextGeometry& a, const TwoContextGeometry& b) { return a.data_ == b.data_; }

 private:
  explicit TwoContextGeometry(GeometryData data);
  GeometryData data_;
  std::vector<std::pair<int, int>> point_contexts_;
};

/// l x l matrix of pairwise context intersections.
class ConfigurationMatrix {
 public:
  ConfigurationMatrix(int size, std::vector<int> entries);
  int size() const { return size_; }
  int at(int i, int j) const { return entries_[static_cast<std::size_t>(i * size_ + j)]; }
  int row_sum(int i) const;
  const std::vector<int>& entries() const { return entries_; }
  friend bool operator==(const ConfigurationMatrix&, const ConfigurationMatrix&) = default;

 private:
  int size_;
  std::vector<int> entries_;
};

ConfigurationMatrix configuration_matrix(const TwoContextGeometry& g);

/// Inverse of configuration_matrix up to isomorphism: m_ij points for each context pair
/// i < j, numbered in pair order. Throws InvalidGeometry if the matrix is not admissible.
TwoContextGeometry geometry_from_matrix(const ConfigurationMatrix& m);

/// One vertex per context, one edge per point joining its two contexts (0-based).
struct DualMultigraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;

  int degree(int v) const;
  int multiplicity(int a, int b) const;
};

DualMultigraph dual_multigraph(const TwoContextGeometry& g);

inline constexpr int kMaxCanonicalContexts = 12;

class SizeLimitExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Isomorphism invariant: equal iff the geometries differ by relabeling points and contexts.
/// Layout: [l, p, lower triangle of the lexicographically greatest relabeled matrix].
std::string canonical_form(const TwoContextGeometry& g);
std::string canonical_form(const ConfigurationMatrix& m);

/// Vertex order realizing the canonical form (canonical position -> original context).
std::vector<int> canonical_order(const ConfigurationMatrix& m);

/// One representative per isomorphism class, sorted by canonical form. Any l, p accepted
/// (p <= l is not imposed); l must not exceed kMaxCanonicalContexts.
std::vector<TwoContextGeometry> enumerate_geometries(int l, int p);
std::vector<ConfigurationMatrix> enumerate_configuration_matrices(int l, int p);

struct ParameterSet {
  int contexts;
  int context_size;
  int points() const { return contexts * context_size / 2; }
  friend bool operator==(const ParameterSet&, const ParameterSet&) = default;
};

/// (l,p) with p >= 3, lp even, p <= l and lp/2 <= max_points; sorted by (points, l).
std::vector<ParameterSet> admissible_parameter_sets(int max_points);

struct StarPolygon {
  int p = 0;
  int q = 0;
  TwoContextGeometry geometry;
  /// Per chord, its 2q points in geometric order from vertex i to vertex i+q.
  std::vector<std::vector<int>> along_chord;
};

/// {p/q} with all self-intersections as points. Points 1..p are the polygon vertices
/// (vertex k is point k+1); crossings follow. Chord i is context i.
StarPolygon star_polygon(int p, int q);

struct CatalogEntry {
  std::string name;
  TwoContextGeometry geometry;
  std::optional<std::map<int, std::string>> labeling;
  std::string provenance;
};

std::vector<std::string> catalog_names();
/// Throws std::out_of_range for unknown names.
CatalogEntry catalog(const std::string& name);

}  // namespace ctxgeo

#endif  // CTXGEO_GEOMETRY_HPP
