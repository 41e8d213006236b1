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
#include <stdexcept>

#include "ctxgeo/geometry.hpp"

namespace ctxgeo {

namespace {

using Labels = std::map<int, std::string>;

Labels labels_from(std::initializer_list<const char*> ops) {
  Labels out;
  int pt = 1;
  for (const char* op : ops) out[pt++] = op;
  return out;
}

CatalogEntry entry(std::string name, int points, std::vector<std::vector<int>> contexts, std::string provenance,
                   std::optional<Labels> labeling = std::nullopt) {
  return CatalogEntry{std::move(name), TwoContextGeometry::make(GeometryData{points, std::move(contexts)}),
                      std::move(labeling), std::move(provenance)};
}

// Rows and columns ordered row1, col1, col2, col3, row2, row3, so the configuration
// matrix is the bipartite pattern {0,4,5} vs {1,2,3}.
const std::vector<std::vector<int>> kGridContexts = {{1, 2, 3}, {1, 4, 7}, {2, 5, 8}, {3, 6, 9}, {4, 5, 6}, {7, 8, 9}};

// Points: IYI IIX XXX YYX YXY XYY YII XII IIY IXI.
const std::vector<std::vector<int>> kPentagramContexts = {
    {3, 4, 5, 6}, {2, 3, 8, 10}, {1, 2, 4, 7}, {5, 7, 9, 10}, {1, 6, 8, 9}};

// Chords of the {7/2} star: tips are the odd points, inner crossings the even ones.
const std::vector<std::vector<int>> kHeptagramContexts = {{1, 2, 4, 5},     {3, 4, 6, 7},   {5, 6, 8, 9},
                                                          {7, 8, 10, 11},   {9, 10, 12, 13}, {1, 11, 12, 14},
                                                          {2, 3, 13, 14}};

}  // namespace

std::vector<std::string> catalog_names() {
  return {"mermin-peres-square", "mermin-pentagram", "pasch", "miquel", "second-44", "prism",
          "grid",                "ovoid-complement", "heptagram", "54-a", "54-b", "54-c"};
}

CatalogEntry catalog(const std::string& name) {
  if (name == "mermin-peres-square") {
    return entry(name, 9, kGridContexts, "Mermin-Peres magic square; two-qubit labeling, negative context ZZ XX YY",
                 labels_from({"IZ", "ZI", "ZZ", "XI", "IX", "XX", "XZ", "ZX", "YY"}));
  }
  if (name == "mermin-pentagram") {
    return entry(name, 10, kPentagramContexts, "Mermin pentagram; three-qubit labeling, negative context XXX YYX YXY XYY",
                 labels_from({"IYI", "IIX", "XXX", "YYX", "YXY", "XYY", "YII", "XII", "IIY", "IXI"}));
  }
  if (name == "heptagram") {
    return entry(name, 14, kHeptagramContexts,
                 "magic {7/2} heptagram; four-qubit labeling, the only star cover of its commuting quadruples",
                 labels_from({"IYII", "IIXI", "YXXI", "XYXY", "XIIY", "XXZI", "YYZY", "IIZY", "IXII", "IIYZ", "YYYZ",
                              "IIYI", "IXIZ", "YIIZ"}));
  }
  if (name == "grid") {
    return entry(name, 9, kGridContexts, "3x3 grid, the (6,3) geometry underlying the magic square");
  }
  if (name == "pasch") {
    return entry(name, 6, {{1, 2, 3}, {3, 4, 5}, {1, 5, 6}, {2, 4, 6}}, "Pasch configuration, the unique (4,3) geometry");
  }
  if (name == "miquel") {
    return entry(name, 8, {{1, 2, 3, 4}, {3, 4, 7, 8}, {5, 6, 7, 8}, {1, 2, 5, 6}},
                 "(4,4) geometry of circles contained in the Miquel configuration; matrix is a doubled 4-cycle");
  }
  if (name == "second-44") {
    return entry(name, 8, {{1, 2, 3, 4}, {3, 4, 5, 6}, {1, 6, 7, 8}, {2, 5, 7, 8}},
                 "the other (4,4) geometry; contexts 1,2 and 3,4 share two points, all other pairs one");
  }
  if (name == "prism") {
    return entry(name, 9, {{1, 2, 3}, {3, 4, 5}, {5, 6, 7}, {1, 7, 8}, {2, 8, 9}, {4, 6, 9}},
                 "prism (double triangle), the non-grid (6,3) geometry");
  }
  if (name == "ovoid-complement") {
    return entry(name, 12,
                 {{1, 2, 3}, {3, 8, 11}, {10, 11, 12}, {6, 9, 12}, {4, 5, 6}, {1, 4, 7}, {7, 8, 9}, {2, 5, 10}},
                 "complement of an ovoid (transversal) of a 4x4 grid: 12 points on 8 contexts of 3; "
                 "dual graph is the cube");
  }
  if (name == "54-a" || name == "54-b" || name == "54-c") {
    // The (5,4) classes other than K5 (the pentagram), in canonical order.
    auto all = enumerate_geometries(5, 4);
    const std::string pentagram = canonical_form(catalog("mermin-pentagram").geometry);
    std::vector<TwoContextGeometry> others;
    for (auto& g : all)
      if (canonical_form(g) != pentagram) others.push_back(std::move(g));
    if (others.size() != 3) throw std::logic_error("expected three non-pentagram (5,4) geometries");
    std::size_t idx = static_cast<std::size_t>(name.back() - 'a');
    return CatalogEntry{name, others[idx], std::nullopt,
                        "(5,4) geometry that is not a partial linear space, taken from the enumeration"};
  }
  throw std::out_of_range("unknown catalog entry: " + name);
}

}  // namespace ctxgeo
