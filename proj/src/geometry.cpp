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

#include "ctxgeo/geometry.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ctxgeo {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Empty:
      return "empty";
    case ViolationKind::NonUniformContextSize:
      return "non_uniform_context_size";
    case ViolationKind::ContextTooSmall:
      return "context_too_small";
    case ViolationKind::PointOutOfRange:
      return "point_out_of_range";
    case ViolationKind::RepeatedPointInContext:
      return "repeated_point_in_context";
    case ViolationKind::PointDegree:
      return "point_degree";
    case ViolationKind::IntersectionBound:
      return "intersection_bound";
    case ViolationKind::PointCount:
      return "point_count";
  }
  return "unknown";
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

ValidationReport validate(const GeometryData& g) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, std::string msg, std::vector<int> ctx, std::vector<int> pts) {
    report.violations.push_back({kind, std::move(msg), std::move(ctx), std::move(pts)});
  };
  const int l = static_cast<int>(g.contexts.size());
  if (l == 0 || g.num_points <= 0) {
    add(ViolationKind::Empty, "geometry has no contexts or no points", {}, {});
    return report;
  }
  const int p = static_cast<int>(g.contexts[0].size());
  bool uniform = true;
  for (int c = 1; c < l; ++c) {
    if (static_cast<int>(g.contexts[c].size()) != p) {
      uniform = false;
      add(ViolationKind::NonUniformContextSize,
          "context " + std::to_string(c) + " has " + std::to_string(g.contexts[c].size()) + " points, expected " +
              std::to_string(p),
          {0, c}, {});
    }
  }
  if (p < 3) {
    add(ViolationKind::ContextTooSmall, "contexts must hold at least 3 points", {0}, {});
  }

  std::vector<std::vector<int>> on(static_cast<std::size_t>(g.num_points) + 1);
  std::vector<std::set<int>> sets(l);
  for (int c = 0; c < l; ++c) {
    for (int pt : g.contexts[c]) {
      if (pt < 1 || pt > g.num_points) {
        add(ViolationKind::PointOutOfRange, "point id " + std::to_string(pt) + " out of range", {c}, {pt});
        continue;
      }
      if (!sets[c].insert(pt).second) {
        add(ViolationKind::RepeatedPointInContext,
            "point " + std::to_string(pt) + " repeated in context " + std::to_string(c), {c}, {pt});
        continue;
      }
      on[pt].push_back(c);
    }
  }
  for (int pt = 1; pt <= g.num_points; ++pt) {
    if (on[pt].size() != 2) {
      add(ViolationKind::PointDegree,
          "point " + std::to_string(pt) + " lies on " + std::to_string(on[pt].size()) + " contexts", on[pt], {pt});
    }
  }
  if (uniform && p >= 3) {
    for (int a = 0; a < l; ++a) {
      for (int b = a + 1; b < l; ++b) {
        std::vector<int> common;
        std::set_intersection(sets[a].begin(), sets[a].end(), sets[b].begin(), sets[b].end(),
                              std::back_inserter(common));
        if (static_cast<int>(common.size()) > p - 2) {
          add(ViolationKind::IntersectionBound,
              "contexts " + std::to_string(a) + " and " + std::to_string(b) + " share " +
                  std::to_string(common.size()) + " points (bound " + std::to_string(p - 2) + ")",
              {a, b}, common);
        }
      }
    }
    if (l * p != 2 * g.num_points) {
      add(ViolationKind::PointCount,
          std::to_string(g.num_points) + " points but l*p/2 = " + std::to_string(l * p) + "/2", {}, {});
    }
  }
  return report;
}

namespace {

std::string describe(const ValidationReport& r) {
  std::ostringstream out;
  out << "invalid geometry";
  for (const auto& v : r.violations) out << "; " << v.message;
  return out.str();
}

}  // namespace

InvalidGeometry::InvalidGeometry(ValidationReport report)
    : std::invalid_argument(describe(report)), report_(std::move(report)) {}

TwoContextGeometry::TwoContextGeometry(GeometryData data) : data_(std::move(data)) {
  point_contexts_.assign(static_cast<std::size_t>(data_.num_points), {-1, -1});
  for (int c = 0; c < num_contexts(); ++c) {
    for (int pt : data_.contexts[c]) {
      auto& slot = point_contexts_[pt - 1];
      (slot.first < 0 ? slot.first : slot.second) = c;
    }
  }
}

TwoContextGeometry TwoContextGeometry::make(GeometryData data) {
  auto report = validate(data);
  if (!report.ok()) throw InvalidGeometry(std::move(report));
  return TwoContextGeometry(std::move(data));
}

bool TwoContextGeometry::share_context(int a, int b) const {
  auto [a1, a2] = contexts_of(a);
  auto [b1, b2] = contexts_of(b);
  return a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2;
}

TwoContextGeometry TwoContextGeometry::normalized() const {
  GeometryData d = data_;
  for (auto& c : d.contexts) std::sort(c.begin(), c.end());
  return TwoContextGeometry(std::move(d));
}

ConfigurationMatrix::ConfigurationMatrix(int size, std::vector<int> entries) : size_(size), entries_(std::move(entries)) {
  if (size < 0 || entries_.size() != static_cast<std::size_t>(size * size)) {
    throw std::invalid_argument("configuration matrix entries do not match its size");
  }
}

int ConfigurationMatrix::row_sum(int i) const {
  int s = 0;
  for (int j = 0; j < size_; ++j) s += at(i, j);
  return s;
}

ConfigurationMatrix configuration_matrix(const TwoContextGeometry& g) {
  const int l = g.num_contexts();
  std::vector<int> e(static_cast<std::size_t>(l * l), 0);
  for (int pt = 1; pt <= g.num_points(); ++pt) {
    auto [a, b] = g.contexts_of(pt);
    ++e[a * l + b];
    ++e[b * l + a];
  }
  return ConfigurationMatrix(l, std::move(e));
}

TwoContextGeometry geometry_from_matrix(const ConfigurationMatrix& m) {
  GeometryData d;
  d.contexts.resize(m.size());
  int next = 1;
  for (int i = 0; i < m.size(); ++i) {
    for (int j = i + 1; j < m.size(); ++j) {
      for (int k = 0; k < m.at(i, j); ++k) {
        d.contexts[i].push_back(next);
        d.contexts[j].push_back(next);
        ++next;
      }
    }
  }
  d.num_points = next - 1;
  for (auto& c : d.contexts) std::sort(c.begin(), c.end());
  return TwoContextGeometry::make(std::move(d));
}

int DualMultigraph::degree(int v) const {
  int d = 0;
  for (auto [a, b] : edges) d += (a == v) + (b == v);
  return d;
}

int DualMultigraph::multiplicity(int a, int b) const {
  int n = 0;
  for (auto [x, y] : edges) n += (x == a && y == b) || (x == b && y == a);
  return n;
}

DualMultigraph dual_multigraph(const TwoContextGeometry& g) {
  DualMultigraph mg;
  mg.num_vertices = g.num_contexts();
  for (int pt = 1; pt <= g.num_points(); ++pt) mg.edges.push_back(g.contexts_of(pt));
  return mg;
}

std::vector<ParameterSet> admissible_parameter_sets(int max_points) {
  std::vector<ParameterSet> out;
  // p = 2 is excluded: a context {A, B} forces B = +-A.
  for (int l = 3; l <= max_points; ++l) {
    for (int p = 3; p <= l; ++p) {
      if ((l * p) % 2 == 0 && l * p / 2 <= max_points) out.push_back({l, p});
    }
  }
  std::sort(out.begin(), out.end(), [](const ParameterSet& a, const ParameterSet& b) {
    if (a.points() != b.points()) return a.points() < b.points();
    return a.contexts < b.contexts;
  });
  return out;
}

}  // namespace ctxgeo
