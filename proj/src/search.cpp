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

// Vector-first realization search.
//
// Points receive nonzero symplectic vectors in GF(2)^{2n} (x bits low, z bits high) in a
// fixed order. Same-context pairs must commute, and the last point of a context is forced
// to the sum of its peers. Signs come last: each vector becomes its + observable, so the
// parity of negative contexts is a function of the vectors alone. With require_contextual
// the partial Gram values are kept in an affine system over the null space of the Gram
// relations, and a branch dies as soon as odd parity becomes unreachable.

#include "ctxgeo/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "ctxgeo/gf2.hpp"

namespace ctxgeo {

namespace {

using Vec = std::uint32_t;
using Clock = std::chrono::steady_clock;

int symp(Vec a, Vec b, int n) {
  Vec mask = (Vec{1} << n) - 1;
  Vec ax = a & mask, az = a >> n, bx = b & mask, bz = b >> n;
  return std::popcount((ax & bz) ^ (az & bx)) & 1;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Linear equations in the null-space coordinates of the Gram relations.
class AffineSystem {
 public:
  explicit AffineSystem(std::size_t unknowns = 0) : unknowns_(unknowns) {}

  /// False if the system became inconsistent.
  bool add(gf2::BitRow coeffs, bool rhs) {
    reduce(coeffs, rhs);
    std::size_t pivot = coeffs.first_set();
    if (pivot == unknowns_) return !rhs;
    rows_.push_back({std::move(coeffs), rhs, pivot});
    return true;
  }

  /// Whether target . c = 1 is still attainable.
  bool can_reach_one(gf2::BitRow target) const {
    bool rhs = true;
    reduce(target, rhs);
    return target.any() || !rhs;
  }

 private:
  struct Row {
    gf2::BitRow coeffs;
    bool rhs;
    std::size_t pivot;
  };

  void reduce(gf2::BitRow& coeffs, bool& rhs) const {
    for (const auto& r : rows_) {
      if (coeffs.get(r.pivot)) {
        coeffs ^= r.coeffs;
        rhs ^= r.rhs;
      }
    }
  }

  std::size_t unknowns_;
  std::vector<Row> rows_;
};

struct Plan {
  int n = 0;
  int m = 0;
  std::vector<int> order;  // position -> point id
  std::vector<std::vector<int>> neighbors_before;
  std::vector<std::vector<std::vector<int>>> closing;
  int first_context_free = 0;  // positions [0, this) are free points of context 0

  bool parity = false;
  bool root_feasible = true;
  std::size_t unknowns = 0;
  std::vector<std::vector<std::pair<int, std::size_t>>> new_vars;  // (earlier position, variable)
  std::vector<gf2::BitRow> var_coeff;
  gf2::BitRow target;
};

Plan make_plan(const TwoContextGeometry& g, const SearchConfig& cfg) {
  Plan plan;
  plan.n = cfg.n_qubits;
  plan.m = g.num_points();
  const int m = plan.m;
  std::vector<int> pos(static_cast<std::size_t>(m) + 1, -1);
  auto place = [&](int pt) {
    pos[pt] = static_cast<int>(plan.order.size());
    plan.order.push_back(pt);
  };
  for (int pt : g.context(0)) place(pt);
  while (static_cast<int>(plan.order.size()) < m) {
    int best = -1;
    std::tuple<int, int> best_key{-1, -1};
    for (int u = 1; u <= m; ++u) {
      if (pos[u] >= 0) continue;
      auto [c1, c2] = g.contexts_of(u);
      int closes = 0, touched = 0;
      for (int c : {c1, c2}) {
        int missing = 0;
        for (int w : g.context(c)) {
          if (w == u) continue;
          if (pos[w] < 0) {
            ++missing;
          } else {
            ++touched;
          }
        }
        closes += missing == 0;
      }
      std::tuple<int, int> key{closes, touched};
      if (key > best_key) {
        best_key = key;
        best = u;
      }
    }
    place(best);
  }

  plan.neighbors_before.resize(m);
  plan.closing.resize(m);
  for (int t = 0; t < m; ++t) {
    int u = plan.order[t];
    auto [c1, c2] = g.contexts_of(u);
    std::vector<int> nb;
    for (int c : {c1, c2}) {
      std::vector<int> others;
      bool closed = true;
      for (int w : g.context(c)) {
        if (w == u) continue;
        others.push_back(pos[w]);
        if (pos[w] < t) {
          nb.push_back(pos[w]);
        } else {
          closed = false;
        }
      }
      if (closed) plan.closing[t].push_back(others);
    }
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    plan.neighbors_before[t] = nb;
  }
  plan.first_context_free = cfg.symmetry_reduction ? g.context_size() - 1 : 0;

  if (cfg.require_contextual) {
    plan.parity = true;
    GramSystem sys = build_gram_system(g);
    gf2::EchelonBasis basis(sys.variables.size(), std::max<std::size_t>(sys.constraints.size(), 1));
    for (std::size_t r = 0; r < sys.constraints.size(); ++r) basis.insert(sys.constraints[r], r);
    auto null = basis.null_space();
    plan.unknowns = null.size();
    plan.var_coeff.assign(sys.variables.size(), gf2::BitRow(plan.unknowns));
    plan.target = gf2::BitRow(plan.unknowns);
    for (std::size_t b = 0; b < null.size(); ++b) {
      for (std::size_t k = 0; k < sys.variables.size(); ++k)
        if (null[b].get(k)) plan.var_coeff[k].set(b);
      if (null[b].dot(sys.target)) plan.target.set(b);
    }
    plan.root_feasible = plan.target.any();
    plan.new_vars.resize(m);
    for (int t = 0; t < m; ++t) {
      for (int s = 0; s < t; ++s) {
        int k = sys.variable_index(plan.order[t], plan.order[s]);
        if (k >= 0) plan.new_vars[t].emplace_back(s, static_cast<std::size_t>(k));
      }
    }
  }
  return plan;
}

struct SharedState {
  Clock::time_point start;
  Clock::time_point deadline;
  std::mutex progress_mu;
};

class Searcher {
 public:
  Searcher(const TwoContextGeometry& g, const Plan& plan, const SearchConfig& cfg, SharedState& shared)
      : g_(g), plan_(plan), cfg_(cfg), shared_(shared) {
    vec_.assign(static_cast<std::size_t>(plan.m), 0);
    used_.assign(std::size_t{1} << (2 * plan.n), 0);
    if (plan.parity) parity_.assign(static_cast<std::size_t>(plan.m) + 1, AffineSystem(plan.unknowns));
    rank_.assign(static_cast<std::size_t>(plan.m) + 1, 0);
  }

  void run(int depth) { dfs(depth); }

  /// Records, in DFS order, every valid prefix of length `depth`.
  void collect(int t, int depth, std::vector<std::vector<Vec>>& out) {
    ++nodes_;
    if (t == depth) {
      out.emplace_back(vec_.begin(), vec_.begin() + depth);
      return;
    }
    each_candidate(t, [&](Vec v) {
      if (!place(t, v)) return true;
      collect(t + 1, depth, out);
      unplace(t);
      return true;
    });
  }

  void restore(const std::vector<Vec>& prefix) {
    for (std::size_t t = 0; t < prefix.size(); ++t) {
      if (!place(static_cast<int>(t), prefix[t])) throw std::logic_error("frontier prefix no longer valid");
    }
  }

  std::vector<Labeling> solutions;
  std::uint64_t nodes_ = 0;
  bool hit_limit = false;
  bool timed_out = false;

 private:
  bool stopped() const { return hit_limit || timed_out; }

  void dfs(int t) {
    if (stopped()) return;
    ++nodes_;
    if ((nodes_ & 1023) == 0 && Clock::now() > shared_.deadline) {
      timed_out = true;
      return;
    }
    if (cfg_.on_progress && nodes_ % cfg_.progress_interval == 0) report(t);
    if (t == plan_.m) {
      leaf();
      return;
    }
    each_candidate(t, [&](Vec v) {
      if (!place(t, v)) return true;
      dfs(t + 1);
      unplace(t);
      return !stopped();
    });
  }

  void report(int depth) {
    std::lock_guard<std::mutex> lock(shared_.progress_mu);
    cfg_.on_progress(SearchProgress{nodes_, depth, solutions.size(),
                                    std::chrono::duration<double>(Clock::now() - shared_.start).count()});
  }

  // Calls f(v) for each branch at position t until f returns false.
  template <typename F>
  void each_candidate(int t, F&& f) const {
    const int n = plan_.n;
    if (!plan_.closing[t].empty()) {
      Vec v = 0;
      for (int s : plan_.closing[t].front()) v ^= vec_[s];
      f(v);
      return;
    }
    if (!cfg_.seed && t >= plan_.first_context_free) {
      const Vec limit = Vec{1} << (2 * n);
      for (Vec v = 1; v < limit; ++v)
        if (!f(v)) return;
      return;
    }
    for (Vec v : shuffled_candidates(t))
      if (!f(v)) return;
  }

  std::vector<Vec> shuffled_candidates(int t) const {
    std::vector<Vec> out;
    const int n = plan_.n;
    if (t < plan_.first_context_free) {
      // Canonical isotropic tuple: z-only vectors inside span(e_1..e_r), or the next e_{r+1}.
      int r = rank_[t];
      for (Vec z = 1; z < (Vec{1} << r); ++z) out.push_back(z << n);
      if (r < n) out.push_back((Vec{1} << r) << n);
    } else {
      Vec limit = Vec{1} << (2 * n);
      out.reserve(limit);
      for (Vec v = 1; v < limit; ++v) out.push_back(v);
    }
    if (cfg_.seed) {
      std::uint64_t h = splitmix(*cfg_.seed ^ splitmix(static_cast<std::uint64_t>(t)));
      for (int s = 0; s < t; ++s) h = splitmix(h ^ vec_[s]);
      std::mt19937_64 rng(h);
      std::shuffle(out.begin(), out.end(), rng);
    }
    return out;
  }

  bool place(int t, Vec v) {
    const int n = plan_.n;
    if (v == 0) return false;
    if (!cfg_.allow_duplicates && used_[v]) return false;
    for (std::size_t k = 1; k < plan_.closing[t].size(); ++k) {
      Vec other = 0;
      for (int s : plan_.closing[t][k]) other ^= vec_[s];
      if (other != v) return false;
    }
    for (int s : plan_.neighbors_before[t])
      if (symp(v, vec_[s], n)) return false;
    if (plan_.parity) {
      AffineSystem next = parity_[t];
      for (auto [s, k] : plan_.new_vars[t]) {
        if (!next.add(plan_.var_coeff[k], symp(v, vec_[s], n) != 0)) return false;
      }
      if (!next.can_reach_one(plan_.target)) return false;
      parity_[t + 1] = std::move(next);
    }
    vec_[t] = v;
    ++used_[v];
    int r = rank_[t];
    if (t < plan_.first_context_free && (v >> n) == (Vec{1} << r)) ++r;
    rank_[t + 1] = r;
    return true;
  }

  void unplace(int t) { --used_[vec_[t]]; }

  void leaf() {
    const int n = plan_.n;
    const Vec mask = (Vec{1} << n) - 1;
    Labeling lab;
    for (int t = 0; t < plan_.m; ++t)
      lab.emplace(plan_.order[t], PauliObservable::from_vector(n, vec_[t] & mask, vec_[t] >> n));
    auto rep = verify_labeling(g_, lab, VerifyOptions{!cfg_.allow_duplicates});
    if (!rep.postulates.first_four()) throw std::logic_error("search emitted a labeling violating postulates 1'-4");
    if (cfg_.require_contextual && !rep.postulates.odd_negative) return;
    solutions.push_back(std::move(lab));
    if (solutions.size() >= cfg_.max_solutions) hit_limit = true;
  }

  const TwoContextGeometry& g_;
  const Plan& plan_;
  const SearchConfig& cfg_;
  SharedState& shared_;
  std::vector<Vec> vec_;
  std::vector<std::uint16_t> used_;
  std::vector<AffineSystem> parity_;
  std::vector<int> rank_;
};

}  // namespace

RealizationResult find_realization(const TwoContextGeometry& g, const SearchConfig& cfg) {
  if (cfg.n_qubits < 1 || cfg.n_qubits > kMaxSearchQubits) {
    throw std::invalid_argument("n_qubits must be in 1.." + std::to_string(kMaxSearchQubits));
  }
  if (cfg.max_solutions < 1) throw std::invalid_argument("max_solutions must be at least 1");
  if (cfg.time_budget.count() <= 0) throw std::invalid_argument("time_budget must be positive");

  Plan plan = make_plan(g, cfg);
  SharedState shared;
  shared.start = Clock::now();
  shared.deadline = shared.start + std::chrono::duration_cast<Clock::duration>(cfg.time_budget);

  RealizationResult result;
  if (plan.parity && !plan.root_feasible) {
    result.nodes_explored = 1;
    result.exhausted = true;
    return result;
  }

  if (cfg.threads <= 1) {
    Searcher s(g, plan, cfg, shared);
    s.run(0);
    result.solutions = std::move(s.solutions);
    result.nodes_explored = s.nodes_;
    result.timed_out = s.timed_out;
    result.exhausted = !s.timed_out && !s.hit_limit;
    return result;
  }

  // Split at the shallowest depth that yields enough independent subtrees.
  std::vector<std::vector<Vec>> frontier;
  std::uint64_t split_nodes = 0;
  for (int depth = 1; depth <= plan.m; ++depth) {
    frontier.clear();
    Searcher probe(g, plan, cfg, shared);
    probe.collect(0, depth, frontier);
    split_nodes = probe.nodes_;
    if (frontier.size() >= static_cast<std::size_t>(8 * cfg.threads)) break;
  }
  const int split_depth = frontier.empty() ? 0 : static_cast<int>(frontier.front().size());

  struct Slot {
    std::vector<Labeling> solutions;
    std::uint64_t nodes = 0;
    bool timed_out = false;
  };
  std::vector<Slot> slots(frontier.size());
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < cfg.threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < frontier.size(); i = next++) {
          Searcher s(g, plan, cfg, shared);
          s.restore(frontier[i]);
          s.run(split_depth);
          slots[i] = Slot{std::move(s.solutions), s.nodes_, s.timed_out};
        }
      });
    }
  }
  std::size_t total = 0;
  bool timed_out = false;
  result.nodes_explored = split_nodes;
  for (auto& slot : slots) {
    total += slot.solutions.size();
    timed_out = timed_out || slot.timed_out;
    result.nodes_explored += slot.nodes;
    for (auto& s : slot.solutions) {
      if (result.solutions.size() < cfg.max_solutions) result.solutions.push_back(std::move(s));
    }
  }
  result.timed_out = timed_out;
  result.exhausted = !timed_out && total < cfg.max_solutions;
  return result;
}

VerificationReport replay_catalog_labeling(const std::string& name) {
  CatalogEntry e = catalog(name);
  if (!e.labeling) throw std::invalid_argument("catalog entry " + name + " has no labeling");
  return verify_labeling(e.geometry, parse_labeling(*e.labeling));
}

}  // namespace ctxgeo
