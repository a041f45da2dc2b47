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

// The approximate-core imputation: per odd cycle the 2k+1 alternating
// k-edge matchings, the scaling profile f and the imputation c = f * v,
// together with the integral matching T that funds it.

#ifndef APPROXCORE_MECHANISM_HPP
#define APPROXCORE_MECHANISM_HPP

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "approxcore/bipartite_solver.hpp"
#include "approxcore/errors.hpp"
#include "approxcore/half_integral.hpp"
#include "approxcore/instance.hpp"
#include "approxcore/rational.hpp"

namespace approxcore {

/// M_j: the k alternate edges left after deleting cycle vertex i_j.
struct CycleMatching {
  Vertex removed;
  std::vector<std::size_t> edges;
  Money weight;
};

struct CycleAnalysis {
  std::vector<CycleMatching> matchings;  // entry j removes cycle.vertices[j]
  std::size_t heaviest_index = 0;
  Money heaviest_weight;
};

/// Index of the heaviest matching; ties go to the smallest removed vertex.
inline std::size_t heaviest_tiebreak(std::span<const CycleMatching> matchings) {
  detail::require(!matchings.empty(), "heaviest_tiebreak: no matchings");
  std::size_t best = 0;
  for (std::size_t j = 1; j < matchings.size(); ++j) {
    const auto& a = matchings[j];
    const auto& b = matchings[best];
    if (a.weight > b.weight || (a.weight == b.weight && a.removed < b.removed)) {
      best = j;
    }
  }
  return best;
}

inline CycleAnalysis analyze_cycle(const GameInstance& g, const OddCycle& cycle,
                                   std::span<const Money> v) {
  const std::size_t len = cycle.length();
  detail::require(len % 2 == 1 && len >= 3 && cycle.edges.size() == len &&
                      cycle.k * 2 + 1 == len,
                  "analyze_cycle: not an odd cycle");
  CycleAnalysis a;
  a.matchings.reserve(len);
  Money sum = 0;
  for (std::size_t j = 0; j < len; ++j) {
    CycleMatching m{cycle.vertices[j], {}, Money(0)};
    // Deleting i_j drops edges j-1 and j; the path left over is edges
    // j+1 .. j+2k-1 and its alternate edges start at j+1.
    for (std::size_t t = 1; t < 2 * cycle.k; t += 2) {
      const std::size_t e = cycle.edges[(j + t) % len];
      m.edges.push_back(e);
      m.weight += g.edge(e).weight;
    }
    detail::require(m.edges.size() == cycle.k, "analyze_cycle: |M_j| != k");
    detail::require(v[m.removed] == cycle.v_c - m.weight,
                    "analyze_cycle: cover is not v_C - w(M_j) at vertex " +
                        std::to_string(m.removed));
    sum += m.weight;
    a.matchings.push_back(std::move(m));
  }
  const Money two_k(2 * cycle.k);
  detail::require(sum == two_k * cycle.v_c,
                  "analyze_cycle: sum of w(M_j) != 2k v_C");
  a.heaviest_index = heaviest_tiebreak(a.matchings);
  a.heaviest_weight = a.matchings[a.heaviest_index].weight;
  detail::require(Money(len) * a.heaviest_weight >= two_k * cycle.v_c,
                  "analyze_cycle: heaviest matching below 2k/(2k+1) v_C");
  return a;
}

struct ScalingProfile {
  std::vector<Money> f;

  Money minimum() const {
    Money lo = 1;
    for (const Money& fi : f) lo = std::min(lo, fi);
    return lo;
  }
};

/// f(i) = 2k/(2k+1) on a half-integral cycle of length 2k+1, 1 elsewhere.
inline ScalingProfile scaling_profile(const GameInstance& g,
                                      const FractionalComponents& comps) {
  ScalingProfile p;
  p.f.assign(g.vertex_count(), Money(1));
  for (const OddCycle& c : comps.odd_cycles) {
    const Money factor(BigInt(2 * c.k), BigInt(2 * c.k + 1));
    for (Vertex i : c.vertices) p.f[i] = factor;
  }
  return p;
}

struct ImputationResult {
  std::vector<Money> c;
  std::vector<Money> cover;             // the minimum cover v behind c
  std::vector<std::size_t> matching;    // T, edge indices ascending
  ScalingProfile f;
  Money worth_fractional;               // weight(x) = OPT_f
  Money matching_weight;                // w(T)
  Money allocated;                      // sum of c
  Money factor_guarantee;               // min f

  Money slack() const { return matching_weight - allocated; }
};

/// Every intermediate stage of one run, kept for auditing.
struct MechanismTrace {
  DoubledGraph doubled;
  PrimalDualCertificate certificate;
  HalfIntegralSolution folded;
  HalfIntegralSolution solution;  // normalized
  FractionalComponents components;
  std::vector<CycleAnalysis> analyses;  // parallel to components.odd_cycles
  ImputationResult result;
};

namespace detail {

inline bool is_matching(const GameInstance& g, std::span<const std::size_t> edges) {
  std::vector<char> used(g.vertex_count(), 0);
  for (std::size_t k : edges) {
    const Edge& e = g.edge(k);
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

}  // namespace detail

/// Full pipeline: double, solve, fold, normalise, decompose, analyse each
/// odd cycle, scale. Every structural identity is checked along the way and
/// a failure throws InvariantError.
inline MechanismTrace run_mechanism_traced(const GameInstance& g) {
  MechanismTrace t;
  t.doubled = double_graph(g);
  t.certificate = solve_bipartite(t.doubled);
  if (auto bad = check_certificate(t.doubled, t.certificate); !bad.empty()) {
    throw InvariantError(std::string("solve_bipartite certificate: ") +
                         to_string(bad.front().kind) + " " + bad.front().detail);
  }
  t.folded = fold_solution(g, t.doubled, t.certificate);
  t.solution = normalize(g, t.folded);
  t.components = decompose_components(g, t.solution);
  for (const OddCycle& c : t.components.odd_cycles) {
    t.analyses.push_back(analyze_cycle(g, c, t.solution.v));
  }

  ImputationResult& r = t.result;
  r.f = scaling_profile(g, t.components);
  r.cover = t.solution.v;
  r.c.resize(g.vertex_count());
  r.allocated = 0;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    r.c[i] = r.f.f[i] * r.cover[i];
    r.allocated += r.c[i];
  }
  r.matching = t.components.integral_edges;
  for (std::size_t j = 0; j < t.analyses.size(); ++j) {
    const auto& a = t.analyses[j];
    const auto& heavy = a.matchings[a.heaviest_index].edges;
    r.matching.insert(r.matching.end(), heavy.begin(), heavy.end());
  }
  std::sort(r.matching.begin(), r.matching.end());
  r.matching_weight = 0;
  for (std::size_t k : r.matching) r.matching_weight += g.edge(k).weight;
  r.worth_fractional = t.solution.weight(g);
  r.factor_guarantee = r.f.minimum();

  detail::require(detail::is_matching(g, r.matching),
                  "run_mechanism: T is not a matching");
  detail::require(r.allocated <= r.matching_weight,
                  "run_mechanism: allocated exceeds w(T)");
  detail::require(r.factor_guarantee * 3 >= 2,
                  "run_mechanism: scaling factor below 2/3");
  for (const Edge& e : g.edges()) {
    detail::require(3 * (r.c[e.u] + r.c[e.v]) >= 2 * e.weight,
                    "run_mechanism: c is not a 2/3-approximate cover");
  }
  return t;
}

inline ImputationResult run_mechanism(const GameInstance& g) {
  return run_mechanism_traced(g).result;
}

/// Re-verifies a trace from scratch, without trusting the pipeline's own
/// checks. Returns one message per failed identity; empty means every
/// certificate, cover, cycle and budget identity holds exactly.
inline std::vector<std::string> audit_trace(const GameInstance& g,
                                            const MechanismTrace& t) {
  std::vector<std::string> out;
  auto fail = [&](std::string msg) { out.push_back(std::move(msg)); };
  const std::size_t n = g.vertex_count();

  for (const auto& v : check_certificate(t.doubled, t.certificate)) {
    fail(std::string("certificate ") + to_string(v.kind) + ": " + v.detail);
  }
  const auto& s = t.solution;
  if (s.x.size() != g.edge_count() || s.v.size() != n) {
    fail("solution has wrong dimensions");
    return out;
  }
  if (s.weight(g) != s.cover_value()) fail("strong duality: weight(x) != sum v");
  if (t.folded.weight(g) != s.weight(g)) fail("normalize changed weight(x)");
  if (t.folded.v != s.v) fail("normalize changed v");
  std::vector<int> degree(n, 0);
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    degree[e.u] += s.x[k];
    degree[e.v] += s.x[k];
    if (s.v[e.u] + s.v[e.v] < e.weight) {
      fail("cover infeasible on edge " + std::to_string(k));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (degree[i] > 2) fail("degree constraint at vertex " + std::to_string(i));
    if (s.v[i] < 0) fail("negative cover at vertex " + std::to_string(i));
    if (denominator_of(s.v[i]) > 2) fail("cover not half-integral");
  }

  std::vector<char> on_cycle_edge(g.edge_count(), 0);
  for (std::size_t ci = 0; ci < t.components.odd_cycles.size(); ++ci) {
    const OddCycle& c = t.components.odd_cycles[ci];
    const std::size_t len = c.length();
    const std::string tag = "cycle " + std::to_string(ci) + ": ";
    if (len % 2 == 0 || len < 3 || 2 * c.k + 1 != len) {
      fail(tag + "not odd");
      continue;
    }
    Money w_c = 0, v_c = 0;
    for (std::size_t tt = 0; tt < len; ++tt) {
      const Edge& e = g.edge(c.edges[tt]);
      const Vertex a = c.vertices[tt], b = c.vertices[(tt + 1) % len];
      if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) {
        fail(tag + "edge order broken");
      }
      if (s.x[c.edges[tt]] != 1) fail(tag + "edge not at x = 1/2");
      on_cycle_edge[c.edges[tt]] = 1;
      w_c += e.weight;
      v_c += s.v[c.vertices[tt]];
    }
    if (w_c != 2 * v_c) fail(tag + "w_C != 2 v_C");
    if (ci >= t.analyses.size()) {
      fail(tag + "missing analysis");
      continue;
    }
    const CycleAnalysis& a = t.analyses[ci];
    if (a.matchings.size() != len) {
      fail(tag + "expected 2k+1 matchings");
      continue;
    }
    Money sum = 0, heaviest = -1;
    for (std::size_t j = 0; j < len; ++j) {
      const CycleMatching& m = a.matchings[j];
      Money w = 0;
      for (std::size_t e : m.edges) {
        w += g.edge(e).weight;
        if (g.edge(e).touches(m.removed)) fail(tag + "M_j touches i_j");
      }
      if (m.removed != c.vertices[j]) fail(tag + "removed vertex mismatch");
      if (m.edges.size() != c.k || !detail::is_matching(g, m.edges)) {
        fail(tag + "M_j is not a k-edge matching");
      }
      if (w != m.weight) fail(tag + "stored w(M_j) wrong");
      if (s.v[m.removed] != v_c - w) fail(tag + "v_{i_j} != v_C - w(M_j)");
      sum += w;
      heaviest = std::max(heaviest, w);
    }
    if (sum != Money(2 * c.k) * v_c) fail(tag + "sum w(M_j) != 2k v_C");
    if (a.heaviest_weight != heaviest) fail(tag + "M' is not the heaviest");
    if (Money(len) * heaviest < Money(2 * c.k) * v_c) {
      fail(tag + "(2k+1) w(M') < 2k v_C");
    }
  }
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (s.x[k] == 1 && !on_cycle_edge[k]) {
      fail("half edge " + std::to_string(k) + " outside every odd cycle");
    }
  }

  const ImputationResult& r = t.result;
  Money allocated = 0, t_weight = 0, f_min = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (r.c[i] != r.f.f[i] * s.v[i]) fail("c != f v at vertex " + std::to_string(i));
    if (r.f.f[i] * 3 < 2 || r.f.f[i] > 1) fail("f out of [2/3, 1]");
    allocated += r.c[i];
    f_min = std::min(f_min, r.f.f[i]);
  }
  for (std::size_t k : r.matching) t_weight += g.edge(k).weight;
  if (!detail::is_matching(g, r.matching)) fail("T is not a matching");
  if (allocated != r.allocated) fail("allocated total wrong");
  if (t_weight != r.matching_weight) fail("w(T) wrong");
  if (allocated > t_weight) fail("sum c > w(T)");
  if (f_min != r.factor_guarantee) fail("factor guarantee != min f");
  if (r.worth_fractional != s.weight(g)) fail("fractional optimum wrong");
  for (const Edge& e : g.edges()) {
    const Money lhs = r.c[e.u] + r.c[e.v];
    if (3 * lhs < 2 * e.weight) fail("c is not a 2/3-approximate cover");
    if (lhs < std::min(r.f.f[e.u], r.f.f[e.v]) * e.weight) {
      fail("c_i + c_j < min(f_i, f_j) w_ij");
    }
  }
  return out;
}

}  // namespace approxcore

#endif  // APPROXCORE_MECHANISM_HPP
