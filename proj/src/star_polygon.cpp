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
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "ctxgeo/geometry.hpp"

namespace ctxgeo {

namespace {

struct Vec2 {
  double x;
  double y;
};

Vec2 vertex(int k, int p) {
  double a = 2.0 * std::numbers::pi * k / p;
  return {std::cos(a), std::sin(a)};
}

// Parameter along segment a->b of its intersection with segment c->d.
double crossing_param(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  double rx = b.x - a.x, ry = b.y - a.y;
  double sx = d.x - c.x, sy = d.y - c.y;
  double denom = rx * sy - ry * sx;
  return ((c.x - a.x) * sy - (c.y - a.y) * sx) / denom;
}

}  // namespace

StarPolygon star_polygon(int p, int q) {
  if (p < 5) throw std::invalid_argument("star polygon needs p >= 5");
  if (q < 2 || 2 * q >= p) throw std::invalid_argument("star polygon needs 2 <= q < p/2");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("star polygon needs gcd(p, q) = 1");

  auto mod = [p](int k) { return ((k % p) + p) % p; };
  // Crossing of chords i and i+d (1 <= d < q) gets id p + 1 + i*(q-1) + (d-1).
  auto crossing_id = [&](int i, int j) {
    int d = mod(j - i);
    if (d >= q) {
      std::swap(i, j);
      d = mod(j - i);
    }
    return p + 1 + i * (q - 1) + (d - 1);
  };

  GeometryData data;
  data.num_points = p * q;
  std::vector<std::vector<int>> along(p);
  for (int i = 0; i < p; ++i) {
    Vec2 a = vertex(i, p);
    Vec2 b = vertex(i + q, p);
    std::vector<std::pair<double, int>> pts{{0.0, i + 1}, {1.0, mod(i + q) + 1}};
    for (int d = 1; d < q; ++d) {
      for (int j : {mod(i + d), mod(i - d)}) {
        double t = crossing_param(a, b, vertex(j, p), vertex(j + q, p));
        pts.emplace_back(t, crossing_id(i, j));
      }
    }
    std::sort(pts.begin(), pts.end());
    for (auto& [t, id] : pts) along[i].push_back(id);
    std::vector<int> ctx = along[i];
    std::sort(ctx.begin(), ctx.end());
    data.contexts.push_back(std::move(ctx));
  }
  return StarPolygon{p, q, TwoContextGeometry::make(std::move(data)), std::move(along)};
}

}  // namespace ctxgeo
