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

// Independent oracles and randomized property checks shared by the unit tests
// and the acceptance runner.

#ifndef CTXGEO_TESTS_SUPPORT_HPP
#define CTXGEO_TESTS_SUPPORT_HPP

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ctxgeo/analysis.hpp"
#include "ctxgeo/geometry.hpp"
#include "ctxgeo/pauli.hpp"
#include "ctxgeo/search.hpp"

namespace ctxgeo::testing {

// ---------------------------------------------------------------- dense Pauli matrices

using Complex = std::complex<double>;

struct Dense {
  int dim = 1;
  std::vector<Complex> a{Complex(1)};

  Complex& at(int r, int c) { return a[static_cast<std::size_t>(r * dim + c)]; }
  Complex at(int r, int c) const { return a[static_cast<std::size_t>(r * dim + c)]; }
};

inline Dense dense_letter(char c) {
  Dense m;
  m.dim = 2;
  m.a.assign(4, Complex(0));
  const Complex i(0, 1);
  switch (c) {
    case 'I': m.at(0, 0) = 1; m.at(1, 1) = 1; break;
    case 'X': m.at(0, 1) = 1; m.at(1, 0) = 1; break;
    case 'Y': m.at(0, 1) = -i; m.at(1, 0) = i; break;
    case 'Z': m.at(0, 0) = 1; m.at(1, 1) = -1; break;
  }
  return m;
}

inline Dense kron(const Dense& a, const Dense& b) {
  Dense m;
  m.dim = a.dim * b.dim;
  m.a.assign(static_cast<std::size_t>(m.dim * m.dim), Complex(0));
  for (int r1 = 0; r1 < a.dim; ++r1)
    for (int c1 = 0; c1 < a.dim; ++c1)
      for (int r2 = 0; r2 < b.dim; ++r2)
        for (int c2 = 0; c2 < b.dim; ++c2) m.at(r1 * b.dim + r2, c1 * b.dim + c2) = a.at(r1, c1) * b.at(r2, c2);
  return m;
}

inline Dense matmul(const Dense& a, const Dense& b) {
  Dense m;
  m.dim = a.dim;
  m.a.assign(a.a.size(), Complex(0));
  for (int r = 0; r < a.dim; ++r)
    for (int k = 0; k < a.dim; ++k)
      for (int c = 0; c < a.dim; ++c) m.at(r, c) += a.at(r, k) * b.at(k, c);
  return m;
}

inline Dense scaled(Dense m, Complex s) {
  for (auto& v : m.a) v *= s;
  return m;
}

inline Dense dagger(const Dense& m) {
  Dense d = m;
  for (int r = 0; r < m.dim; ++r)
    for (int c = 0; c < m.dim; ++c) d.at(r, c) = std::conj(m.at(c, r));
  return d;
}

inline bool approx_equal(const Dense& a, const Dense& b) {
  if (a.dim != b.dim) return false;
  for (std::size_t k = 0; k < a.a.size(); ++k)
    if (std::abs(a.a[k] - b.a[k]) > 1e-9) return false;
  return true;
}

inline Dense identity_matrix(int dim) {
  Dense m;
  m.dim = dim;
  m.a.assign(static_cast<std::size_t>(dim * dim), Complex(0));
  for (int k = 0; k < dim; ++k) m.at(k, k) = 1;
  return m;
}

/// Dense matrix of i^s X^x Z^z built from single-qubit X and Z factors, qubit 0 leftmost.
inline Dense dense_of(const PauliElement& p) {
  Dense m;
  for (int q = 0; q < p.n_qubits(); ++q) {
    Dense f = identity_matrix(2);
    if (p.x(q)) f = matmul(f, dense_letter('X'));
    if (p.z(q)) f = matmul(f, dense_letter('Z'));
    m = kron(m, f);
  }
  static const Complex kPhases[4] = {Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)};
  return scaled(m, kPhases[p.phase_exp() & 3]);
}

/// Dense matrix read directly off the letter string.
inline Dense dense_of_string(const std::string& s) {
  Dense m;
  std::size_t pos = 0;
  Complex sign = 1;
  if (!s.empty() && s[0] == '-') {
    sign = -1;
    pos = 1;
  }
  for (; pos < s.size(); ++pos) m = kron(m, dense_letter(s[pos]));
  return scaled(m, sign);
}

// ---------------------------------------------------------------- random objects

inline PauliObservable random_observable(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<std::uint32_t> word(0, (1u << (2 * n)) - 1);
  std::uint32_t v = 0;
  while (v == 0) v = word(rng);
  auto p = PauliObservable::from_vector(n, v & ((1u << n) - 1), v >> n);
  return (rng() & 1) ? p.negated() : p;
}

/// Random list of mutually commuting observables whose product is +-Id; needs size <= n + 1.
inline std::vector<PauliObservable> random_identity_context(std::mt19937_64& rng, int n, int size) {
  for (;;) {
    std::vector<PauliObservable> ops;
    int guard = 0;
    while (static_cast<int>(ops.size()) < size - 1 && guard++ < 1000) {
      auto cand = random_observable(rng, n);
      bool ok = true;
      for (const auto& o : ops) ok = ok && commutes(o, cand) && !o.same_up_to_sign(cand);
      if (ok) ops.push_back(cand);
    }
    if (static_cast<int>(ops.size()) != size - 1) continue;
    PauliElement prod = PauliElement::identity(n);
    for (const auto& o : ops) prod = multiply(prod, o.element());
    if (prod.is_identity_up_to_phase()) continue;
    auto last = PauliObservable::from_vector(n, prod.x_bits(), prod.z_bits());
    bool distinct = true;
    for (const auto& o : ops) distinct = distinct && !o.same_up_to_sign(last);
    if (!distinct) continue;
    ops.push_back((rng() & 1) ? last.negated() : last);
    return ops;
  }
}

/// Random isomorphic copy: points and contexts renamed, contexts and their members shuffled.
inline TwoContextGeometry random_relabel(const TwoContextGeometry& g, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(g.num_points()));
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  GeometryData d{g.num_points(), {}};
  for (const auto& c : g.contexts()) {
    std::vector<int> nc;
    for (int pt : c) nc.push_back(perm[static_cast<std::size_t>(pt - 1)]);
    std::shuffle(nc.begin(), nc.end(), rng);
    d.contexts.push_back(nc);
  }
  std::shuffle(d.contexts.begin(), d.contexts.end(), rng);
  return TwoContextGeometry::make(d);
}

// ---------------------------------------------------------------- brute-force oracles

/// Contextual-parity oracle by direct enumeration of commutation patterns.
/// Returns true when some pattern satisfying all "context members commute with a
/// common outsider an even number of times" constraints gives an odd context word
/// sign. Only for geometries with few non-collinear pairs.
inline bool brute_force_contingent(const TwoContextGeometry& g, int max_vars = 24) {
  const int m = g.num_points();
  std::vector<std::pair<int, int>> vars;
  std::map<std::pair<int, int>, int> index;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (!g.share_context(i, j)) {
        index[{i, j}] = static_cast<int>(vars.size());
        vars.emplace_back(i, j);
      }
  if (static_cast<int>(vars.size()) > max_vars) throw std::invalid_argument("too many pairs for brute force");
  auto anti = [&](std::uint64_t a, int i, int j) {
    if (i == j) return 0;
    auto it = index.find({std::min(i, j), std::max(i, j)});
    return it == index.end() ? 0 : static_cast<int>((a >> it->second) & 1);
  };
  // The sign of the product of all context products, each written in context order,
  // rearranged into a product of squares, is (-1)^(number of inversions between
  // anticommuting pairs in the concatenated word).
  std::vector<int> word;
  for (const auto& c : g.contexts()) word.insert(word.end(), c.begin(), c.end());
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << vars.size()); ++a) {
    bool ok = true;
    for (int c = 0; c < g.num_contexts() && ok; ++c) {
      for (int k = 1; k <= m && ok; ++k) {
        if (std::find(g.context(c).begin(), g.context(c).end(), k) != g.context(c).end()) continue;
        int s = 0;
        for (int i : g.context(c)) s ^= anti(a, i, k);
        ok = s == 0;
      }
    }
    if (!ok) continue;
    // Sort the word by bubble sort, counting swaps of anticommuting neighbours.
    std::vector<int> w = word;
    int parity = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = 0; j + 1 < w.size() - i; ++j)
        if (w[j] > w[j + 1]) {
          parity ^= anti(a, w[j], w[j + 1]);
          std::swap(w[j], w[j + 1]);
        }
    if (parity) return true;
  }
  return false;
}

/// Isomorphism classes of (l,p) geometries by exhaustive matrix search, minimizing
/// over all l! context orders.
inline std::size_t brute_force_class_count(int l, int p) {
  std::vector<int> a(static_cast<std::size_t>(l * l), 0);
  std::vector<int> rowsum(static_cast<std::size_t>(l), 0);
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) cells.emplace_back(i, j);
  std::set<std::vector<int>> classes;
  std::vector<int> perm(static_cast<std::size_t>(l));
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      for (int r : rowsum)
        if (r != p) return;
      std::vector<int> best;
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<int> enc;
        for (int i = 0; i < l; ++i)
          for (int j = i + 1; j < l; ++j) enc.push_back(a[static_cast<std::size_t>(perm[i] * l + perm[j])]);
        if (best.empty() || enc < best) best = enc;
      } while (std::next_permutation(perm.begin(), perm.end()));
      classes.insert(best);
      return;
    }
    auto [i, j] = cells[k];
    for (int v = 0; v <= p - 2; ++v) {
      if (rowsum[i] + v > p || rowsum[j] + v > p) break;
      a[static_cast<std::size_t>(i * l + j)] = a[static_cast<std::size_t>(j * l + i)] = v;
      rowsum[i] += v;
      rowsum[j] += v;
      // Row i is complete after its last cell; prune if it misses p.
      bool ok = !(j == l - 1 && rowsum[i] != p);
      if (ok) self(self, k + 1);
      rowsum[i] -= v;
      rowsum[j] -= v;
    }
    a[static_cast<std::size_t>(i * l + j)] = a[static_cast<std::size_t>(j * l + i)] = 0;
  };
  rec(rec, 0);
  return classes.size();
}

// ---------------------------------------------------------------- property checks

struct PropertyResult {
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures++ == 0) first_failure = what;
  }
  bool passed(int min_cases = 100) const { return failures == 0 && cases >= min_cases; }
};

inline std::vector<PauliElement> all_elements(int n) {
  std::vector<PauliElement> out;
  for (QubitWord x = 0; x < (1u << n); ++x)
    for (QubitWord z = 0; z < (1u << n); ++z)
      for (int s = 0; s < 4; ++s) out.emplace_back(n, x, z, s);
  return out;
}

inline void check_element_pair(const PauliElement& a, const PauliElement& b, PropertyResult& r) {
  Dense da = dense_of(a), db = dense_of(b);
  Dense ab = matmul(da, db);
  r.record(approx_equal(ab, dense_of(multiply(a, b))), "multiply " + format_element(a) + " * " + format_element(b));
  bool dense_commute = approx_equal(ab, matmul(db, da));
  r.record(dense_commute == commutes(a, b), "commutes " + format_element(a) + " , " + format_element(b));
}

/// Pauli multiplication, commutation and Hermiticity against dense matrices:
/// all pairs for n = 1, 2 and `random_cases` random pairs for n = 3.
inline PropertyResult pauli_dense_property(std::uint64_t seed, int random_cases = 500) {
  PropertyResult r;
  for (int n = 1; n <= 2; ++n) {
    auto all = all_elements(n);
    for (const auto& a : all) {
      Dense d = dense_of(a);
      r.record(approx_equal(d, dagger(d)) == a.is_hermitian(), "hermitian " + format_element(a));
      for (const auto& b : all) check_element_pair(a, b, r);
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<QubitWord> w(0, 7);
  std::uniform_int_distribution<int> ph(0, 3);
  for (int k = 0; k < random_cases; ++k) {
    PauliElement a(3, w(rng), w(rng), ph(rng)), b(3, w(rng), w(rng), ph(rng));
    check_element_pair(a, b, r);
    auto o = random_observable(rng, 3);
    r.record(approx_equal(dense_of(o.element()), dense_of_string(format_observable(o))),
             "string form " + format_observable(o));
  }
  return r;
}

/// Products of random commuting +-Id contexts do not depend on the order of factors.
inline PropertyResult context_product_order_property(std::uint64_t seed, int cases = 200) {
  PropertyResult r;
  std::mt19937_64 rng(seed);
  for (int k = 0; k < cases; ++k) {
    int n = 2 + static_cast<int>(rng() % 3);
    int size = n == 2 ? 3 : 3 + static_cast<int>(rng() % 2);
    auto ops = random_identity_context(rng, n, size);
    int s0 = context_product(ops).sign;
    Dense prod = identity_matrix(1 << n);
    for (const auto& o : ops) prod = matmul(prod, dense_of(o.element()));
    bool ok = approx_equal(prod, scaled(identity_matrix(1 << n), s0));
    for (int t = 0; t < 5; ++t) {
      std::shuffle(ops.begin(), ops.end(), rng);
      ok = ok && context_product(ops).sign == s0;
    }
    r.record(ok, "context product order");
  }
  return r;
}

/// Labelings used by the sign-flip property: catalog labelings plus seeded search hits.
inline std::vector<std::pair<TwoContextGeometry, Labeling>> sample_labelings() {
  std::vector<std::pair<TwoContextGeometry, Labeling>> out;
  for (const auto& name : catalog_names()) {
    auto e = catalog(name);
    if (e.labeling) out.emplace_back(e.geometry, parse_labeling(*e.labeling));
  }
  struct Job {
    const char* name;
    int n;
    bool contextual;
  };
  for (Job j : {Job{"grid", 2, true}, Job{"mermin-pentagram", 3, true}, Job{"pasch", 3, false}, Job{"prism", 3, false}}) {
    SearchConfig cfg;
    cfg.n_qubits = j.n;
    cfg.require_contextual = j.contextual;
    cfg.max_solutions = 8;
    cfg.seed = 17;
    auto g = catalog(j.name).geometry;
    for (auto& lab : find_realization(g, cfg).solutions) out.emplace_back(g, std::move(lab));
  }
  return out;
}

/// Negating any subset of labels keeps is_contextual and the parity of negative_count.
inline PropertyResult sign_flip_property(std::uint64_t seed, int cases = 200) {
  PropertyResult r;
  std::mt19937_64 rng(seed);
  auto samples = sample_labelings();
  for (int k = 0; k < cases; ++k) {
    const auto& [g, lab] = samples[static_cast<std::size_t>(k) % samples.size()];
    auto before = verify_labeling(g, lab);
    Labeling flipped = lab;
    for (auto& [pt, op] : flipped)
      if (rng() & 1) op = op.negated();
    auto after = verify_labeling(g, flipped);
    r.record(after.is_contextual == before.is_contextual && (after.negative_count - before.negative_count) % 2 == 0,
             "sign flip");
  }
  return r;
}

inline std::vector<TwoContextGeometry> small_geometries() {
  std::vector<TwoContextGeometry> out;
  for (auto ps : admissible_parameter_sets(10))
    for (auto& g : enumerate_geometries(ps.contexts, ps.context_size)) out.push_back(std::move(g));
  for (const auto& name : catalog_names()) out.push_back(catalog(name).geometry);
  out.push_back(star_polygon(7, 2).geometry);
  return out;
}

/// canonical_form is invariant under renaming and reordering.
inline PropertyResult canonical_relabel_property(std::uint64_t seed, int per_geometry = 8) {
  PropertyResult r;
  std::mt19937_64 rng(seed);
  for (const auto& g : small_geometries()) {
    std::string c0 = canonical_form(g);
    for (int k = 0; k < per_geometry; ++k) r.record(canonical_form(random_relabel(g, rng)) == c0, "canonical relabel");
  }
  return r;
}

/// parity_analysis verdict is invariant under renaming and reordering; certificates check.
inline PropertyResult parity_ordering_property(std::uint64_t seed, int per_geometry = 8) {
  PropertyResult r;
  std::mt19937_64 rng(seed);
  for (const auto& g : small_geometries()) {
    auto v0 = parity_analysis(g).verdict;
    for (int k = 0; k < per_geometry; ++k) {
      auto h = random_relabel(g, rng);
      auto v = parity_analysis(h);
      r.record(v.verdict == v0 && check_certificate(h, v), "parity ordering");
    }
  }
  return r;
}

}  // namespace ctxgeo::testing

#endif  // CTXGEO_TESTS_SUPPORT_HPP
