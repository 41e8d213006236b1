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

#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"

using namespace ctxgeo;
using namespace ctxgeo::testing;

TEST(geometry, validate_accepts_grid) {
  auto r = validate(GeometryData{9, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {1, 4, 7}, {2, 5, 8}, {3, 6, 9}}});
  EXPECT_TRUE(r.ok());
}

TEST(geometry, validate_reports_each_kind) {
  EXPECT_TRUE(validate(GeometryData{0, {}}).has(ViolationKind::Empty));
  EXPECT_TRUE(validate(GeometryData{3, {{1, 2, 3}, {1, 2}}}).has(ViolationKind::NonUniformContextSize));
  EXPECT_TRUE(validate(GeometryData{2, {{1, 2}, {1, 2}}}).has(ViolationKind::ContextTooSmall));
  EXPECT_TRUE(validate(GeometryData{6, {{1, 2, 3}, {3, 4, 7}, {1, 5, 6}, {2, 4, 6}}}).has(ViolationKind::PointOutOfRange));
  EXPECT_TRUE(validate(GeometryData{6, {{1, 1, 3}, {3, 4, 5}, {1, 5, 6}, {2, 4, 6}}}).has(ViolationKind::RepeatedPointInContext));
  EXPECT_TRUE(validate(GeometryData{6, {{1, 2, 3}, {3, 4, 5}, {1, 5, 6}, {1, 4, 6}}}).has(ViolationKind::PointDegree));
  EXPECT_TRUE(validate(GeometryData{6, {{1, 2, 3, 4}, {1, 2, 3, 5}, {4, 5, 6, 6}}}).has(ViolationKind::IntersectionBound));
  EXPECT_TRUE(validate(GeometryData{7, {{1, 2, 3}, {3, 4, 5}, {1, 5, 6}, {2, 4, 6}}}).has(ViolationKind::PointCount));
  EXPECT_THROW(TwoContextGeometry::make(GeometryData{7, {{1, 2, 3}}}), InvalidGeometry);
}

TEST(geometry, make_preserves_order) {
  auto g = TwoContextGeometry::make(GeometryData{6, {{3, 2, 1}, {5, 4, 3}, {6, 5, 1}, {6, 4, 2}}});
  EXPECT_EQ(g.context(0), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(g.contexts_of(1), (std::pair<int, int>{0, 2}));
  EXPECT_TRUE(g.share_context(1, 2));
  EXPECT_FALSE(g.share_context(1, 4));
}

TEST(geometry, configuration_matrix_round_trip) {
  auto pasch = catalog("pasch").geometry;
  auto m = configuration_matrix(pasch);
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(m.at(i, i), 0);
    EXPECT_EQ(m.row_sum(i), 3);
    for (int j = 0; j < 4; ++j) EXPECT_EQ(m.at(i, j), i == j ? 0 : 1);
  }
  auto back = geometry_from_matrix(m);
  EXPECT_EQ(canonical_form(back), canonical_form(pasch));
}

TEST(geometry, dual_multigraph) {
  auto d = dual_multigraph(catalog("miquel").geometry);
  EXPECT_EQ(d.num_vertices, 4);
  EXPECT_EQ(d.edges.size(), 8u);
  for (int v = 0; v < 4; ++v) EXPECT_EQ(d.degree(v), 4);
  EXPECT_EQ(d.multiplicity(0, 1), 2);
  EXPECT_EQ(d.multiplicity(0, 2), 0);
}

TEST(geometry, enumeration_counts) {
  EXPECT_EQ(enumerate_geometries(4, 3).size(), 1u);
  EXPECT_EQ(enumerate_geometries(4, 4).size(), 2u);
  EXPECT_EQ(enumerate_geometries(6, 3).size(), 2u);
  EXPECT_EQ(enumerate_geometries(5, 4).size(), 4u);
  EXPECT_EQ(enumerate_geometries(5, 3).size(), 0u);  // odd lp
  EXPECT_EQ(enumerate_geometries(3, 4).size(), 1u);
  EXPECT_EQ(enumerate_geometries(3, 3).size(), 0u);
}

TEST(geometry, enumeration_matches_brute_force) {
  for (auto [l, p] : std::vector<std::pair<int, int>>{{3, 4}, {4, 3}, {4, 4}, {5, 4}, {6, 3}, {6, 4}, {6, 5}}) {
    EXPECT_EQ(enumerate_geometries(l, p).size(), brute_force_class_count(l, p)) << "(" << l << "," << p << ")";
  }
}

TEST(geometry, enumeration_results_are_distinct_and_valid) {
  auto gs = enumerate_geometries(8, 3);
  std::set<std::string> forms;
  for (const auto& g : gs) {
    EXPECT_TRUE(validate(g.data()).ok());
    forms.insert(canonical_form(g));
  }
  EXPECT_EQ(forms.size(), gs.size());
}

TEST(geometry, admissible_parameter_sets) {
  auto show = [](int m) {
    std::vector<std::pair<int, int>> v;
    for (auto ps : admissible_parameter_sets(m)) v.emplace_back(ps.contexts, ps.context_size);
    return v;
  };
  using V = std::vector<std::pair<int, int>>;
  EXPECT_EQ(show(6), (V{{4, 3}}));
  EXPECT_EQ(show(10), (V{{4, 3}, {4, 4}, {6, 3}, {5, 4}}));
  EXPECT_EQ(show(12), (V{{4, 3}, {4, 4}, {6, 3}, {5, 4}, {6, 4}, {8, 3}}));
}

TEST(geometry, canonical_form_size_limit) {
  auto s = star_polygon(13, 2).geometry;
  EXPECT_THROW(canonical_form(s), SizeLimitExceeded);
}

TEST(geometry, canonical_relabel_property) {
  auto r = canonical_relabel_property(2024);
  EXPECT_TRUE(r.passed()) << r.first_failure;
}

TEST(geometry, canonical_separates_non_isomorphic) {
  EXPECT_NE(canonical_form(catalog("grid").geometry), canonical_form(catalog("prism").geometry));
  EXPECT_NE(canonical_form(catalog("miquel").geometry), canonical_form(catalog("second-44").geometry));
  EXPECT_EQ(canonical_form(catalog("grid").geometry), canonical_form(catalog("mermin-peres-square").geometry));
}

TEST(star_polygon, structure) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{5, 2}, {7, 2}, {7, 3}, {9, 2}, {9, 4}, {11, 3}, {13, 5}}) {
    auto sp = star_polygon(p, q);
    const auto& g = sp.geometry;
    EXPECT_TRUE(validate(g.data()).ok());
    EXPECT_EQ(g.num_points(), p * q);
    EXPECT_EQ(g.num_contexts(), p);
    EXPECT_EQ(g.context_size(), 2 * q);
    ASSERT_EQ(static_cast<int>(sp.along_chord.size()), p);
    for (int i = 0; i < p; ++i) {
      EXPECT_EQ(sp.along_chord[i].front(), i + 1);
      EXPECT_EQ(sp.along_chord[i].back(), (i + q) % p + 1);
      std::vector<int> sorted = sp.along_chord[i];
      std::sort(sorted.begin(), sorted.end());
      EXPECT_EQ(sorted, g.context(i));
    }
    // Each chord meets 2q others, once each.
    auto m = configuration_matrix(g);
    for (int i = 0; i < p; ++i) {
      int met = 0;
      for (int j = 0; j < p; ++j) {
        EXPECT_LE(m.at(i, j), 1);
        met += m.at(i, j);
      }
      EXPECT_EQ(met, 2 * q);
    }
  }
}

TEST(star_polygon, pentagram_matches_catalog) {
  EXPECT_EQ(canonical_form(star_polygon(5, 2).geometry), canonical_form(catalog("mermin-pentagram").geometry));
  EXPECT_EQ(canonical_form(star_polygon(7, 2).geometry), canonical_form(catalog("heptagram").geometry));
}

TEST(star_polygon, rejects_bad_parameters) {
  EXPECT_THROW(star_polygon(4, 1), std::invalid_argument);
  EXPECT_THROW(star_polygon(6, 2), std::invalid_argument);
  EXPECT_THROW(star_polygon(7, 1), std::invalid_argument);
  EXPECT_THROW(star_polygon(7, 4), std::invalid_argument);
}

TEST(catalog, entries) {
  auto names = catalog_names();
  EXPECT_GE(names.size(), 12u);
  for (const auto& n : names) {
    auto e = catalog(n);
    EXPECT_EQ(e.name, n);
    EXPECT_TRUE(validate(e.geometry.data()).ok()) << n;
    EXPECT_FALSE(e.provenance.empty());
    if (e.labeling) EXPECT_EQ(static_cast<int>(e.labeling->size()), e.geometry.num_points());
  }
  EXPECT_THROW(catalog("nope"), std::out_of_range);
}

TEST(catalog, five_four_entries_are_the_non_pentagram_classes) {
  std::set<std::string> forms;
  for (const auto& g : enumerate_geometries(5, 4)) forms.insert(canonical_form(g));
  std::string penta = canonical_form(catalog("mermin-pentagram").geometry);
  EXPECT_TRUE(forms.count(penta));
  std::set<std::string> named;
  for (const char* n : {"54-a", "54-b", "54-c"}) named.insert(canonical_form(catalog(n).geometry));
  EXPECT_EQ(named.size(), 3u);
  EXPECT_FALSE(named.count(penta));
  for (const auto& f : named) EXPECT_TRUE(forms.count(f));
}

TEST(catalog, ovoid_complement_is_the_grid_complement) {
  // Complement of a transversal in the 4x4 grid: rows and columns minus the diagonal.
  GeometryData d{12, {}};
  std::map<std::pair<int, int>, int> id;
  int next = 1;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (r != c) id[{r, c}] = next++;
  for (int r = 0; r < 4; ++r) {
    std::vector<int> row, col;
    for (int c = 0; c < 4; ++c) {
      if (r != c) row.push_back(id[{r, c}]);
      if (r != c) col.push_back(id[{c, r}]);
    }
    d.contexts.push_back(row);
    d.contexts.push_back(col);
  }
  EXPECT_EQ(canonical_form(TwoContextGeometry::make(d)), canonical_form(catalog("ovoid-complement").geometry));
}
