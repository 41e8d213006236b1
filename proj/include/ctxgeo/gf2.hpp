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

#ifndef CTXGEO_GF2_HPP
#define CTXGEO_GF2_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace ctxgeo::gf2 {

/// Dense bit-vector over GF(2).
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t n_bits) : n_(n_bits), words_((n_bits + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool v = true) {
    std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= m;
    } else {
      words_[i >> 6] &= ~m;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitRow& operator^=(const BitRow& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  /// Lowest set bit, or size() when zero.
  std::size_t first_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return n_;
  }

  bool dot(const BitRow& o) const {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
    return std::popcount(acc) & 1;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  friend bool operator==(const BitRow&, const BitRow&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Incremental row-echelon basis. Each stored row remembers which inserted rows
/// it is the sum of, so membership queries can return a certificate.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t n_bits, std::size_t max_rows) : n_bits_(n_bits), max_rows_(max_rows) {}

  /// Inserts `row` tagged as input number `tag`. Returns false if it was dependent.
  bool insert(BitRow row, std::size_t tag) {
    BitRow combo(max_rows_);
    combo.set(tag);
    reduce(row, combo);
    std::size_t pivot = row.first_set();
    if (pivot == n_bits_) return false;
    rows_.push_back({std::move(row), std::move(combo), pivot});
    return true;
  }

  /// Reduces `row` in place; `combo` accumulates the tags used.
  void reduce(BitRow& row, BitRow& combo) const {
    for (const auto& r : rows_) {
      if (row.get(r.pivot)) {
        row ^= r.bits;
        combo ^= r.combo;
      }
    }
  }

  /// If `target` lies in the span, the set of input tags summing to it.
  std::optional<BitRow> express(const BitRow& target) const {
    BitRow row = target;
    BitRow combo(max_rows_);
    reduce(row, combo);
    if (row.any()) return std::nullopt;
    return combo;
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return n_bits_; }

  /// Basis of { v : r.v = 0 for every stored row r }.
  std::vector<BitRow> null_space() const {
    // Back-substitute into reduced echelon form first.
    std::vector<BitRow> red;
    std::vector<std::size_t> pivots;
    for (const auto& r : rows_) {
      red.push_back(r.bits);
      pivots.push_back(r.pivot);
    }
    for (std::size_t i = 0; i < red.size(); ++i) {
      for (std::size_t j = 0; j < red.size(); ++j) {
        if (j != i && red[j].get(pivots[i])) red[j] ^= red[i];
      }
    }
    std::vector<bool> is_pivot(n_bits_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<BitRow> out;
    for (std::size_t f = 0; f < n_bits_; ++f) {
      if (is_pivot[f]) continue;
      BitRow v(n_bits_);
      v.set(f);
      for (std::size_t i = 0; i < red.size(); ++i) {
        if (red[i].get(f)) v.set(pivots[i]);
      }
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  struct Row {
    BitRow bits;
    BitRow combo;
    std::size_t pivot;
  };
  std::size_t n_bits_;
  std::size_t max_rows_;
  std::vector<Row> rows_;
};

}  // namespace ctxgeo::gf2

#endif  // CTXGEO_GF2_HPP
