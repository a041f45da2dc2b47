// Copyright 2026 The approxcore Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exhaustive oracles for the matching game: coalition worth, approximate
// core membership, integrality gap, odd girth. All exact; each refuses with
// BoundExceeded instead of approximating once its input is too large.

#ifndef APPROXCORE_VERIFICATION_HPP
#define APPROXCORE_VERIFICATION_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "approxcore/bipartite_solver.hpp"
#include "approxcore/errors.hpp"
#include "approxcore/half_integral.hpp"
#include "approxcore/instance.hpp"
#include "approxcore/rational.hpp"

namespace approxcore {

inline constexpr std::size_t kDefaultMaxEdges = 24;
inline constexpr std::size_t kDefaultMaxVertices = 20;

namespace detail {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

/// Maximum-weight matching by recursive include/exclude over `edges`
/// (sorted heaviest first), pruned when the remaining weight cannot beat
/// the incumbent.
class EdgeBranchMatcher {
 public:
  EdgeBranchMatcher(std::vector<Edge> edges, std::size_t vertex_count)
      : edges_(std::move(edges)), used_(vertex_count, 0) {
    std::stable_sort(edges_.begin(), edges_.end(),
                     [](const Edge& a, const Edge& b) { return a.weight > b.weight; });
    suffix_.assign(edges_.size() + 1, 0);
    for (std::size_t k = edges_.size(); k-- > 0;) {
      suffix_[k] = suffix_[k + 1] + edges_[k].weight;
    }
  }

  Weight solve() {
    best_ = 0;
    branch(0, 0);
    return best_;
  }

 private:
  void branch(std::size_t k, Weight current) {
    best_ = std::max(best_, current);
    if (k == edges_.size() || current + suffix_[k] <= best_) return;
    const Edge& e = edges_[k];
    if (!used_[e.u] && !used_[e.v]) {
      used_[e.u] = used_[e.v] = 1;
      branch(k + 1, current + e.weight);
      used_[e.u] = used_[e.v] = 0;
    }
    branch(k + 1, current);
  }

  std::vector<Edge> edges_;
  std::vector<char> used_;
  std::vector<Weight> suffix_;
  Weight best_ = 0;
};

}  // namespace detail

/// p(S): weight of a maximum-weight matching of G restricted to S.
///
/// Zero-weight edges are ignored and each connected component of the
/// remaining subgraph is enumerated separately; `max_edges` bounds the edge
/// count of the largest such component.
inline Weight worth_bruteforce(const GameInstance& g, const Coalition& s,
                               std::size_t max_edges = kDefaultMaxEdges) {
  if (!s.within(g)) throw std::invalid_argument("coalition outside V");
  std::vector<char> in_s(g.vertex_count(), 0);
  for (Vertex i : s.members) in_s[i] = 1;

  detail::UnionFind uf(g.vertex_count());
  std::vector<Edge> inner;
  for (const Edge& e : g.edges()) {
    if (e.weight > 0 && in_s[e.u] && in_s[e.v]) {
      inner.push_back(e);
      uf.unite(e.u, e.v);
    }
  }
  std::vector<std::vector<Edge>> by_root(g.vertex_count());
  for (const Edge& e : inner) by_root[uf.find(e.u)].push_back(e);

  Weight total = 0;
  for (auto& comp : by_root) {
    if (comp.empty()) continue;
    if (comp.size() > max_edges) {
      throw BoundExceeded("worth_bruteforce: component with " +
                          std::to_string(comp.size()) + " edges exceeds bound " +
                          std::to_string(max_edges));
    }
    total += detail::EdgeBranchMatcher(std::move(comp), g.vertex_count()).solve();
  }
  return total;
}

/// p(S) for every S, indexed by bitmask (bit i = vertex i), via
/// p(S) = max(p(S - l), max_j w_lj + p(S - l - j)) with l the lowest member.
inline std::vector<Weight> coalition_worths(
    const GameInstance& g, std::size_t max_n = kDefaultMaxVertices) {
  const std::size_t n = g.vertex_count();
  if (n > max_n || n > 30) {
    throw BoundExceeded("coalition_worths: " + std::to_string(n) +
                        " vertices exceeds bound " + std::to_string(max_n));
  }
  std::vector<std::vector<std::pair<Vertex, Weight>>> adj(n);
  for (const Edge& e : g.edges()) {
    if (e.weight == 0) continue;
    adj[e.u].push_back({e.v, e.weight});
    adj[e.v].push_back({e.u, e.weight});
  }
  const std::uint64_t full = std::uint64_t{1} << n;
  std::vector<Weight> p(full, 0);
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    const unsigned low = static_cast<unsigned>(std::countr_zero(mask));
    const std::uint64_t rest = mask & (mask - 1);
    Weight best = p[rest];
    for (auto [j, w] : adj[low]) {
      if (rest >> j & 1) best = std::max(best, w + p[rest & ~(std::uint64_t{1} << j)]);
    }
    p[mask] = best;
  }
  return p;
}

enum class CheckMode { kEdges, kExhaustive };

inline const char* to_string(CheckMode mode) {
  return mode == CheckMode::kEdges ? "edges" : "exhaustive";
}

struct CoalitionViolation {
  Coalition coalition;
  Weight worth;
  Money allocated;
};

struct CoalitionReport {
  static constexpr std::size_t kMaxListed = 1000;

  CheckMode mode = CheckMode::kExhaustive;
  Money alpha;
  std::uint64_t checked_count = 0;
  std::uint64_t violation_count = 0;
  std::vector<CoalitionViolation> violations;  // first kMaxListed, by bitmask
  std::uint64_t tight_count = 0;
  std::vector<Coalition> tight_coalitions;     // first kMaxListed
  /// min over checked S with p(S) > 0 of sum_S c / p(S).
  std::optional<Money> worst_ratio;
  Money allocated_total;
  /// p(V) and whether sum c <= p(V); unset when p(V) was past the bound.
  std::optional<Weight> grand_worth;
  std::optional<bool> budget_ok;

  bool passed() const { return violation_count == 0 && budget_ok.value_or(true); }
};

namespace detail {

inline Coalition coalition_from_mask(std::uint64_t mask) {
  Coalition s;
  for (Vertex i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1) s.members.push_back(i);
  }
  return s;
}

/// Tallies one coalition S with allocation sum_c (exact) and worth p(S).
inline void record(CoalitionReport& r, const Money& sum_c, Weight worth,
                   const auto& make_coalition) {
  ++r.checked_count;
  const Money required = r.alpha * worth;
  if (sum_c < required) {
    if (r.violations.size() < CoalitionReport::kMaxListed) {
      r.violations.push_back({make_coalition(), worth, sum_c});
    }
    ++r.violation_count;
  } else if (worth > 0 && sum_c == required) {
    if (r.tight_coalitions.size() < CoalitionReport::kMaxListed) {
      r.tight_coalitions.push_back(make_coalition());
    }
    ++r.tight_count;
  }
  if (worth > 0) {
    Money ratio = sum_c / worth;
    if (!r.worst_ratio || ratio < *r.worst_ratio) r.worst_ratio = std::move(ratio);
  }
}

}  // namespace detail

/// Checks c against the alpha-approximate core conditions: sum c <= p(V) and
/// sum_S c >= alpha p(S) for every coalition.
///
/// kExhaustive enumerates all 2^n coalitions (n <= max_n). kEdges checks
/// only singletons and edge pairs, which implies the coalition condition for
/// nonnegative c because p(S) is a sum of edge weights over a matching in S;
/// its budget check uses worth_bruteforce(V) and is left unset past
/// `max_edges`.
inline CoalitionReport check_core(const GameInstance& g, std::span<const Money> c,
                                  const Money& alpha, CheckMode mode,
                                  std::size_t max_n = kDefaultMaxVertices,
                                  std::size_t max_edges = kDefaultMaxEdges) {
  const std::size_t n = g.vertex_count();
  if (c.size() != n) {
    throw std::invalid_argument("imputation has " + std::to_string(c.size()) +
                                " values for " + std::to_string(n) + " agents");
  }
  if (alpha <= 0 || alpha > 1) throw std::invalid_argument("alpha must lie in (0, 1]");
  CoalitionReport r;
  r.mode = mode;
  r.alpha = alpha;
  r.allocated_total = 0;
  for (const Money& ci : c) r.allocated_total += ci;

  if (mode == CheckMode::kExhaustive) {
    const std::vector<Weight> worth = coalition_worths(g, max_n);
    // Scale everything by the common denominator so the 2^n sums are
    // integer additions.
    BigInt lcd = denominator_of(alpha);
    for (const Money& ci : c) lcd = boost::multiprecision::lcm(lcd, denominator_of(ci));
    std::vector<BigInt> scaled(n);
    for (std::size_t i = 0; i < n; ++i) {
      scaled[i] = numerator_of(c[i]) * (lcd / denominator_of(c[i]));
    }
    const BigInt threshold_unit = numerator_of(alpha) * (lcd / denominator_of(alpha));
    const std::uint64_t full = std::uint64_t{1} << n;
    BigInt sum, required, worst_sum = 0;
    Weight worst_worth = 0;
    for (std::uint64_t mask = 0; mask < full; ++mask) {
      sum = 0;
      for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        sum += scaled[std::countr_zero(rest)];
      }
      const Weight p = worth[mask];
      required = threshold_unit * p;
      ++r.checked_count;
      if (sum < required) {
        if (r.violations.size() < CoalitionReport::kMaxListed) {
          r.violations.push_back(
              {detail::coalition_from_mask(mask), p, Money(sum, lcd)});
        }
        ++r.violation_count;
      } else if (p > 0 && sum == required) {
        if (r.tight_coalitions.size() < CoalitionReport::kMaxListed) {
          r.tight_coalitions.push_back(detail::coalition_from_mask(mask));
        }
        ++r.tight_count;
      }
      if (p > 0 && (worst_worth == 0 || sum * worst_worth < worst_sum * p)) {
        worst_sum = sum;
        worst_worth = p;
      }
    }
    if (worst_worth > 0) r.worst_ratio = Money(worst_sum, lcd * worst_worth);
    r.grand_worth = worth[full - 1];
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      detail::record(r, c[i], 0, [i] {
        return Coalition{{static_cast<Vertex>(i)}};
      });
    }
    for (const Edge& e : g.edges()) {
      detail::record(r, c[e.u] + c[e.v], e.weight,
                     [&e] { return Coalition::of({e.u, e.v}); });
    }
    try {
      r.grand_worth = worth_bruteforce(g, Coalition::everyone(g), max_edges);
    } catch (const BoundExceeded&) {
    }
  }
  if (r.grand_worth) r.budget_ok = r.allocated_total <= *r.grand_worth;
  return r;
}

struct GapReport {
  std::optional<Weight> opt_integral;  // unset when brute force refused
  Money opt_fractional;
  std::optional<Money> ratio;          // 1 when opt_fractional = 0
  std::optional<bool> core_nonempty;   // opt_integral == opt_fractional
};

/// OPT_f through the doubled-graph LP pipeline.
inline Money fractional_optimum(const GameInstance& g) {
  const DoubledGraph d = double_graph(g);
  return fold_solution(g, d, solve_bipartite(d)).weight(g);
}

inline GapReport integrality_gap(const GameInstance& g,
                                 std::size_t max_edges = kDefaultMaxEdges) {
  GapReport r;
  r.opt_fractional = fractional_optimum(g);
  try {
    r.opt_integral = worth_bruteforce(g, Coalition::everyone(g), max_edges);
  } catch (const BoundExceeded&) {
    return r;
  }
  r.ratio = r.opt_fractional == 0 ? Money(1) : Money(*r.opt_integral) / r.opt_fractional;
  r.core_nonempty = Money(*r.opt_integral) == r.opt_fractional;
  detail::require(*r.ratio * 3 >= 2 && *r.ratio <= 1,
                  "integrality_gap: ratio outside [2/3, 1]");
  return r;
}

/// Length of a shortest odd cycle, nullopt for bipartite graphs. One BFS per
/// start vertex; an edge inside a BFS layer at depth d closes an odd walk of
/// length 2d + 1, and the minimum over all starts is attained on a
/// shortest odd cycle.
inline std::optional<std::size_t> odd_girth(const GameInstance& g) {
  const std::size_t n = g.vertex_count();
  const auto inc = g.incidence();
  constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
  std::optional<std::size_t> best;
  std::vector<std::size_t> dist(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    std::deque<Vertex> queue{static_cast<Vertex>(s)};
    dist[s] = 0;
    while (!queue.empty()) {
      const Vertex a = queue.front();
      queue.pop_front();
      if (best && 2 * dist[a] + 1 >= *best) break;
      for (std::size_t k : inc[a]) {
        const Vertex b = g.edge(k).other(a);
        if (dist[b] == kUnseen) {
          dist[b] = dist[a] + 1;
          queue.push_back(b);
        } else if (dist[b] == dist[a]) {
          best = std::min(best.value_or(kUnseen), 2 * dist[a] + 1);
        }
      }
    }
  }
  return best;
}

/// 2k/(2k+1) for odd girth 2k+1; 1 if G has no odd cycle.
inline Money guaranteed_alpha(const GameInstance& g) {
  const auto girth = odd_girth(g);
  if (!girth) return Money(1);
  return Money(BigInt(*girth - 1), BigInt(*girth));
}

}  // namespace approxcore

#endif  // APPROXCORE_VERIFICATION_HPP
