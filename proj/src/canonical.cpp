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

// Canonical forms and orderly enumeration of configuration matrices.
//
// The encoding of a vertex order v_0..v_{l-1} is the lower triangle read row by
// row: M[v_1][v_0], M[v_2][v_0], M[v_2][v_1], ... The canonical form is the
// lexicographically greatest encoding over all orders. Because row t of the
// encoding depends only on v_0..v_t, the maximum can be built level by level,
// keeping only the partial orders whose prefix equals the best prefix so far.

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ctxgeo/geometry.hpp"

namespace ctxgeo {

namespace {

using Order = std::array<std::int8_t, kMaxCanonicalContexts>;

struct Partial {
  Order seq{};
  std::uint32_t used = 0;
};

/// Dense view with a row stride, so prefixes of a matrix being built can be canonicalized.
struct MatrixView {
  const int* data;
  int stride;
  int n;
  int at(int i, int j) const { return data[i * stride + j]; }
};

/// Lex-greatest lower-triangle encoding of `m` over all vertex orders; fills `order`.
std::vector<int> best_encoding(const MatrixView& m, Order* order) {
  std::vector<Partial> frontier(1);
  std::vector<int> encoding;
  std::vector<int> best(static_cast<std::size_t>(m.n));
  std::vector<int> seg(static_cast<std::size_t>(m.n));
  for (int t = 0; t < m.n; ++t) {
    std::vector<Partial> next;
    bool have_best = false;
    for (const auto& part : frontier) {
      for (int v = 0; v < m.n; ++v) {
        if (part.used & (1U << v)) continue;
        for (int s = 0; s < t; ++s) seg[s] = m.at(v, part.seq[s]);
        int cmp = 0;
        if (have_best) {
          for (int s = 0; s < t && cmp == 0; ++s) cmp = (seg[s] > best[s]) - (seg[s] < best[s]);
        } else {
          cmp = 1;
        }
        if (cmp < 0) continue;
        if (cmp > 0) {
          next.clear();
          std::copy(seg.begin(), seg.begin() + t, best.begin());
          have_best = true;
        }
        Partial child = part;
        child.seq[t] = static_cast<std::int8_t>(v);
        child.used |= 1U << v;
        next.push_back(child);
      }
    }
    encoding.insert(encoding.end(), best.begin(), best.begin() + t);
    frontier = std::move(next);
  }
  if (order) *order = frontier.front().seq;
  return encoding;
}

void check_size(int l) {
  if (l > kMaxCanonicalContexts) {
    throw SizeLimitExceeded("canonical forms support at most " + std::to_string(kMaxCanonicalContexts) +
                            " contexts, got " + std::to_string(l));
  }
}

std::string pack(int l, int p, const std::vector<int>& enc) {
  std::string out;
  out.reserve(enc.size() + 2);
  out.push_back(static_cast<char>(l));
  out.push_back(static_cast<char>(p));
  for (int e : enc) out.push_back(static_cast<char>(e));
  return out;
}

}  // namespace

std::vector<int> canonical_order(const ConfigurationMatrix& m) {
  check_size(m.size());
  if (m.size() == 0) return {};
  Order order{};
  best_encoding(MatrixView{m.entries().data(), m.size(), m.size()}, &order);
  return std::vector<int>(order.begin(), order.begin() + m.size());
}

std::string canonical_form(const ConfigurationMatrix& m) {
  check_size(m.size());
  int p = m.size() > 0 ? m.row_sum(0) : 0;
  return pack(m.size(), p, best_encoding(MatrixView{m.entries().data(), m.size(), m.size()}, nullptr));
}

std::string canonical_form(const TwoContextGeometry& g) {
  check_size(g.num_contexts());
  return canonical_form(configuration_matrix(g));
}

namespace {

class MatrixEnumerator {
 public:
  MatrixEnumerator(int l, int p) : l_(l), p_(p), m_(static_cast<std::size_t>(l * l), 0), deg_(l, 0) {}

  std::vector<ConfigurationMatrix> run() {
    if (l_ >= 2) fill(1, 0);
    return std::move(found_);
  }

 private:
  int at(int i, int j) const { return m_[i * l_ + j]; }

  // Writes entry (row, col) with col < row; rows are completed left to right.
  void fill(int row, int col) {
    if (row == l_) {
      for (int v = 0; v < l_; ++v)
        if (deg_[v] != p_) return;
      emit();
      return;
    }
    if (col == row) {
      if (!row_done(row)) return;
      fill(row + 1, 0);
      return;
    }
    int hi = std::min({p_ - 2, p_ - deg_[row], p_ - deg_[col]});
    for (int val = hi; val >= 0; --val) {
      set(row, col, val);
      fill(row, col + 1);
      set(row, col, 0);
    }
  }

  void set(int i, int j, int val) {
    int old = m_[i * l_ + j];
    deg_[i] += val - old;
    deg_[j] += val - old;
    m_[i * l_ + j] = val;
    m_[j * l_ + i] = val;
  }

  // Pruning after the induced matrix on 0..row is complete.
  bool row_done(int row) const {
    const int later = l_ - 1 - row;
    for (int v = 0; v <= row; ++v) {
      if (p_ - deg_[v] > (p_ - 2) * later) return false;
    }
    // The prefix of a canonical matrix is canonical among relabelings of its own vertices.
    MatrixView prefix{m_.data(), l_, row + 1};
    std::vector<int> best = best_encoding(prefix, nullptr);
    std::size_t k = 0;
    for (int i = 1; i <= row; ++i) {
      for (int j = 0; j < i; ++j, ++k) {
        if (best[k] != at(i, j)) return best[k] < at(i, j);
      }
    }
    return true;
  }

  void emit() { found_.emplace_back(l_, m_); }

  int l_;
  int p_;
  std::vector<int> m_;
  std::vector<int> deg_;
  std::vector<ConfigurationMatrix> found_;
};

}  // namespace

std::vector<ConfigurationMatrix> enumerate_configuration_matrices(int l, int p) {
  if (l < 1 || p < 1) throw std::invalid_argument("l and p must be positive");
  check_size(l);
  auto mats = MatrixEnumerator(l, p).run();
  std::vector<std::pair<std::string, ConfigurationMatrix>> keyed;
  for (auto& m : mats) {
    auto key = canonical_form(m);
    keyed.emplace_back(std::move(key), std::move(m));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  std::vector<ConfigurationMatrix> out;
  for (auto& [key, m] : keyed) out.push_back(std::move(m));
  return out;
}

std::vector<TwoContextGeometry> enumerate_geometries(int l, int p) {
  std::vector<TwoContextGeometry> out;
  for (const auto& m : enumerate_configuration_matrices(l, p)) out.push_back(geometry_from_matrix(m));
  return out;
}

}  // namespace ctxgeo
