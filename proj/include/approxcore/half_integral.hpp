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

// Optimal half-integral fractional matchings on the original graph, obtained
// by folding the doubled-graph certificate back, and their normalisation to
// a form where every half-edge lies on a vertex-disjoint odd cycle.

#ifndef APPROXCORE_HALF_INTEGRAL_HPP
#define APPROXCORE_HALF_INTEGRAL_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "approxcore/bipartite_solver.hpp"
#include "approxcore/errors.hpp"
#include "approxcore/instance.hpp"
#include "approxcore/rational.hpp"

namespace approxcore {

struct HalfIntegralSolution {
  /// Per edge index, x in doubled units: 0, 1 (x = 1/2) or 2 (x = 1).
  std::vector<std::uint8_t> x;
  /// Minimum cover; every denominator is 1 or 2.
  std::vector<Money> v;
  bool normalized = false;

  Money weight(const GameInstance& g) const {
    BigInt doubled = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      doubled += BigInt(g.edge(k).weight) * x[k];
    }
    return Money(doubled, 2);
  }

  Money cover_value() const {
    Money total = 0;
    for (const Money& vi : v) total += vi;
    return total;
  }
};

/// x_ij = (x_{i'j''} + x_{i''j'}) / 2, v_i = v_{i'} + v_{i''} (undoing the
/// half-unit scale). Throws InvariantError if the folded pair is not an
/// optimal primal-dual pair, which means the certificate was bad.
inline HalfIntegralSolution fold_solution(const GameInstance& g,
                                          const DoubledGraph& d,
                                          const PrimalDualCertificate& cert) {
  const std::size_t n = g.vertex_count();
  detail::require(d.original_vertex_count() == n &&
                      d.edge_count() == 2 * g.edge_count() &&
                      cert.duals.size() == 2 * n,
                  "fold_solution: certificate does not belong to this graph");
  HalfIntegralSolution s;
  s.x.assign(g.edge_count(), 0);
  for (std::size_t k : cert.matched_edges) ++s.x[d.edges()[k].original];
  s.v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.v.emplace_back(cert.duals[d.left_of(static_cast<Vertex>(i))] +
                         cert.duals[d.right_of(static_cast<Vertex>(i))],
                     2);
  }

  std::vector<int> degree(n, 0);
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    degree[g.edge(k).u] += s.x[k];
    degree[g.edge(k).v] += s.x[k];
  }
  for (std::size_t i = 0; i < n; ++i) {
    detail::require(degree[i] <= 2, "fold_solution: degree constraint violated");
    detail::require(s.v[i] >= 0, "fold_solution: negative cover value");
  }
  for (const Edge& e : g.edges()) {
    detail::require(s.v[e.u] + s.v[e.v] >= e.weight,
                    "fold_solution: folded duals are not a cover");
  }
  detail::require(s.weight(g) == s.cover_value(),
                  "fold_solution: weight(x) != value(v), solver bug");
  return s;
}

namespace detail {

/// Connected components of the half-edge subgraph as walks. For a path the
/// walk starts at its lower-id endpoint; for a cycle it starts at the lowest
/// vertex and heads to its lower-id neighbour first. `edges[t]` joins
/// `vertices[t]` and `vertices[t + 1]` (cyclically for cycles).
struct HalfComponent {
  std::vector<Vertex> vertices;
  std::vector<std::size_t> edges;
  bool is_cycle = false;
};

inline std::vector<HalfComponent> half_components(const GameInstance& g,
                                                  const HalfIntegralSolution& s) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> half_adj(n);
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (s.x[k] != 1) continue;
    half_adj[g.edge(k).u].push_back(k);
    half_adj[g.edge(k).v].push_back(k);
  }
  for (std::size_t i = 0; i < n; ++i) {
    require(half_adj[i].size() <= 2, "half-edge degree exceeds 2");
  }

  std::vector<char> visited(n, 0);
  std::vector<HalfComponent> out;
  auto walk = [&](Vertex start, std::size_t first_edge) {
    HalfComponent c;
    c.vertices.push_back(start);
    visited[start] = 1;
    Vertex at = start;
    std::size_t via = first_edge;
    while (true) {
      const Vertex next = g.edge(via).other(at);
      c.edges.push_back(via);
      if (next == start) {
        c.is_cycle = true;
        break;
      }
      c.vertices.push_back(next);
      visited[next] = 1;
      at = next;
      if (half_adj[at].size() < 2) break;
      via = half_adj[at][0] == via ? half_adj[at][1] : half_adj[at][0];
    }
    return c;
  };

  // Paths first from their endpoints, so a walk never starts mid-path.
  for (std::size_t i = 0; i < n; ++i) {
    if (!visited[i] && half_adj[i].size() == 1) {
      out.push_back(walk(static_cast<Vertex>(i), half_adj[i][0]));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (visited[i] || half_adj[i].size() != 2) continue;
    const std::size_t e0 = half_adj[i][0], e1 = half_adj[i][1];
    const Vertex i_vertex = static_cast<Vertex>(i);
    const std::size_t first =
        g.edge(e0).other(i_vertex) < g.edge(e1).other(i_vertex) ? e0 : e1;
    out.push_back(walk(i_vertex, first));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return *std::min_element(a.vertices.begin(), a.vertices.end()) <
           *std::min_element(b.vertices.begin(), b.vertices.end());
  });
  for (const HalfComponent& c : out) {
    require(!c.is_cycle || c.vertices.size() >= 3,
            "degenerate half-edge cycle of length < 3");
  }
  return out;
}

}  // namespace detail

/// Replaces every half-edge path and even half-edge cycle by one of its two
/// alternating integral matchings: the one containing the first edge of the
/// component's canonical walk. Both alternatives must weigh the same for an
/// optimal x; a mismatch throws InvariantError.
inline HalfIntegralSolution normalize(const GameInstance& g,
                                      HalfIntegralSolution s) {
  for (const auto& comp : detail::half_components(g, s)) {
    if (comp.is_cycle && comp.edges.size() % 2 == 1) continue;
    Weight even = 0, odd = 0;
    for (std::size_t t = 0; t < comp.edges.size(); ++t) {
      (t % 2 == 0 ? even : odd) += g.edge(comp.edges[t]).weight;
    }
    detail::require(even == odd,
                    "normalize: alternating matchings of a half-edge " +
                        std::string(comp.is_cycle ? "even cycle" : "path") +
                        " differ in weight (" + std::to_string(even) + " vs " +
                        std::to_string(odd) + ")");
    for (std::size_t t = 0; t < comp.edges.size(); ++t) {
      s.x[comp.edges[t]] = (t % 2 == 0) ? 2 : 0;
    }
  }
  s.normalized = true;
  return s;
}

struct OddCycle {
  /// Cyclic order i_1 .. i_{2k+1}; edges[t] joins vertices[t] and
  /// vertices[(t + 1) % size].
  std::vector<Vertex> vertices;
  std::vector<std::size_t> edges;
  std::size_t k = 0;
  Money w_c;  // total edge weight
  Money v_c;  // total cover value

  std::size_t length() const { return vertices.size(); }
};

struct FractionalComponents {
  std::vector<OddCycle> odd_cycles;
  std::vector<std::size_t> integral_edges;  // x = 1, ascending
};

inline FractionalComponents decompose_components(const GameInstance& g,
                                                 const HalfIntegralSolution& s) {
  detail::require(s.normalized,
                  "decompose_components: solution is not normalized");
  FractionalComponents out;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (s.x[k] == 2) out.integral_edges.push_back(k);
  }
  for (auto& comp : detail::half_components(g, s)) {
    detail::require(comp.is_cycle && comp.edges.size() % 2 == 1,
                    "decompose_components: half-edge outside an odd cycle");
    OddCycle c;
    c.vertices = std::move(comp.vertices);
    c.edges = std::move(comp.edges);
    c.k = (c.vertices.size() - 1) / 2;
    c.w_c = 0;
    c.v_c = 0;
    for (std::size_t e : c.edges) c.w_c += g.edge(e).weight;
    for (Vertex i : c.vertices) c.v_c += s.v[i];
    detail::require(c.w_c == 2 * c.v_c,
                    "decompose_components: w_C != 2 v_C on an odd cycle");
    out.odd_cycles.push_back(std::move(c));
  }
  return out;
}

}  // namespace approxcore

#endif  // APPROXCORE_HALF_INTEGRAL_HPP
