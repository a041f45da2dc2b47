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

// Vertex doubling and the exact primal-dual bipartite matcher.
//
// Every original vertex i becomes i' (left side) and i'' (right side); every
// edge (i, j, w) becomes (i', j'') and (j', i''), each of true weight w/2.
// Weights on the doubled graph are kept in half-units, so a doubled edge
// stores the integer w and all solver arithmetic is integral.

#ifndef APPROXCORE_BIPARTITE_SOLVER_HPP
#define APPROXCORE_BIPARTITE_SOLVER_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "approxcore/instance.hpp"

namespace approxcore {

struct DoubledEdge {
  Vertex left;    // a primed vertex, id in [0, n)
  Vertex right;   // a double-primed vertex, id in [n, 2n)
  Weight weight;  // half-units
  std::size_t original;
};

class DoubledGraph {
 public:
  DoubledGraph() = default;
  DoubledGraph(std::size_t original_vertex_count, std::vector<DoubledEdge> edges)
      : n_(original_vertex_count), edges_(std::move(edges)) {}

  std::size_t original_vertex_count() const { return n_; }
  std::size_t vertex_count() const { return 2 * n_; }
  Vertex left_of(Vertex i) const { return i; }
  Vertex right_of(Vertex i) const { return static_cast<Vertex>(n_ + i); }
  bool is_left(Vertex a) const { return a < n_; }
  /// The original vertex a doubled vertex came from.
  Vertex original_of(Vertex a) const {
    return is_left(a) ? a : static_cast<Vertex>(a - n_);
  }

  const std::vector<DoubledEdge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

 private:
  std::size_t n_ = 0;
  std::vector<DoubledEdge> edges_;
};

/// Original edge k maps to doubled edges 2k = (u', v'') and 2k+1 = (v', u'').
inline DoubledGraph double_graph(const GameInstance& g) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  std::vector<DoubledEdge> edges;
  edges.reserve(2 * g.edge_count());
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    edges.push_back({e.u, n + e.v, e.weight, k});
    edges.push_back({e.v, n + e.u, e.weight, k});
  }
  return DoubledGraph(g.vertex_count(), std::move(edges));
}

struct PrimalDualCertificate {
  std::vector<std::size_t> matched_edges;  // doubled edge indices, ascending
  std::vector<Weight> duals;               // per doubled vertex, half-units

  Weight matched_weight(const DoubledGraph& d) const {
    Weight total = 0;
    for (std::size_t k : matched_edges) total += d.edges()[k].weight;
    return total;
  }

  Weight dual_value() const {
    Weight total = 0;
    for (Weight y : duals) total += y;
    return total;
  }
};

/// Maximum-weight matching on the doubled graph together with an optimal
/// integral cover.
///
/// The problem is solved as a dense n x n assignment (left i' against right
/// j'') where absent pairs carry weight 0, using the O(n^3) shortest
/// augmenting path Hungarian method. The assignment potentials are then
/// shifted so every dual is nonnegative; pairs of weight 0 are tight and
/// therefore end with both duals at 0, so dropping them from the matching
/// leaves complementary slackness intact.
inline PrimalDualCertificate solve_bipartite(const DoubledGraph& d) {
  const std::size_t n = d.original_vertex_count();
  PrimalDualCertificate cert;
  cert.duals.assign(2 * n, 0);
  if (n == 0) return cert;

  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  // profit[i][j] / edge_id[i][j] for left i', right j''.
  std::vector<Weight> profit(n * n, 0);
  std::vector<std::size_t> edge_id(n * n, kNone);
  for (std::size_t k = 0; k < d.edge_count(); ++k) {
    const DoubledEdge& e = d.edges()[k];
    const std::size_t cell = e.left * n + (e.right - n);
    profit[cell] = e.weight;
    edge_id[cell] = k;
  }

  // Minimise cost = -profit. Rows/columns are 1-based; index 0 is the
  // virtual root of each augmenting search.
  constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;
  std::vector<Weight> row_pot(n + 1, 0), col_pot(n + 1, 0);
  std::vector<std::size_t> col_match(n + 1, 0), way(n + 1, 0);
  for (std::size_t row = 1; row <= n; ++row) {
    col_match[0] = row;
    std::size_t col0 = 0;
    std::vector<Weight> min_slack(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[col0] = 1;
      const std::size_t row0 = col_match[col0];
      Weight delta = kInf;
      std::size_t col1 = 0;
      for (std::size_t col = 1; col <= n; ++col) {
        if (used[col]) continue;
        const Weight cost = -profit[(row0 - 1) * n + (col - 1)];
        const Weight cur = cost - row_pot[row0] - col_pot[col];
        if (cur < min_slack[col]) {
          min_slack[col] = cur;
          way[col] = col0;
        }
        if (min_slack[col] < delta) {
          delta = min_slack[col];
          col1 = col;
        }
      }
      for (std::size_t col = 0; col <= n; ++col) {
        if (used[col]) {
          row_pot[col_match[col]] += delta;
          col_pot[col] -= delta;
        } else {
          min_slack[col] -= delta;
        }
      }
      col0 = col1;
    } while (col_match[col0] != 0);
    do {
      const std::size_t col1 = way[col0];
      col_match[col0] = col_match[col1];
      col0 = col1;
    } while (col0 != 0);
  }

  // Potentials satisfy row_pot + col_pot <= -profit; negate for the
  // maximisation dual, then shift mass from rows to columns so the minimum
  // row dual is 0. Since every pair (including absent ones) has profit >= 0,
  // min(left) + min(right) >= 0 and all duals end nonnegative.
  Weight shift = kInf;
  for (std::size_t row = 1; row <= n; ++row) shift = std::min(shift, -row_pot[row]);
  for (std::size_t i = 0; i < n; ++i) {
    cert.duals[i] = -row_pot[i + 1] - shift;
    cert.duals[n + i] = -col_pot[i + 1] + shift;
  }

  for (std::size_t col = 1; col <= n; ++col) {
    const std::size_t row = col_match[col];
    if (row == 0) continue;
    const std::size_t cell = (row - 1) * n + (col - 1);
    if (edge_id[cell] != kNone && profit[cell] > 0) {
      cert.matched_edges.push_back(edge_id[cell]);
    }
  }
  std::sort(cert.matched_edges.begin(), cert.matched_edges.end());
  return cert;
}

struct CertificateViolation {
  enum class Kind {
    kMalformed,         // sizes or edge indices do not fit the graph
    kNotAMatching,      // a doubled vertex is covered twice
    kNegativeDual,
    kDualInfeasible,    // duals[a] + duals[b] < weight on some edge
    kMatchedEdgeSlack,  // CS-1: matched edge not tight
    kUnmatchedPositive, // CS-2: positive dual on an unmatched vertex
    kDualityGap,        // matched weight != dual value
  };
  Kind kind;
  std::string detail;
};

inline const char* to_string(CertificateViolation::Kind kind) {
  using K = CertificateViolation::Kind;
  switch (kind) {
    case K::kMalformed: return "malformed";
    case K::kNotAMatching: return "primal-feasibility";
    case K::kNegativeDual: return "dual-nonnegativity";
    case K::kDualInfeasible: return "dual-feasibility";
    case K::kMatchedEdgeSlack: return "CS-1";
    case K::kUnmatchedPositive: return "CS-2";
    case K::kDualityGap: return "strong-duality";
  }
  return "unknown";
}

/// Independent verifier for solve_bipartite. Empty result iff the
/// certificate is an optimal primal-dual pair.
inline std::vector<CertificateViolation> check_certificate(
    const DoubledGraph& d, const PrimalDualCertificate& cert) {
  using K = CertificateViolation::Kind;
  std::vector<CertificateViolation> out;
  const std::size_t nv = d.vertex_count();
  if (cert.duals.size() != nv) {
    out.push_back({K::kMalformed, "expected " + std::to_string(nv) + " duals"});
    return out;
  }
  std::vector<int> cover_count(nv, 0);
  std::vector<char> is_matched_edge(d.edge_count(), 0);
  for (std::size_t k : cert.matched_edges) {
    if (k >= d.edge_count()) {
      out.push_back({K::kMalformed, "edge index " + std::to_string(k)});
      return out;
    }
    if (is_matched_edge[k]) {
      out.push_back({K::kMalformed, "edge " + std::to_string(k) + " listed twice"});
    }
    is_matched_edge[k] = 1;
    ++cover_count[d.edges()[k].left];
    ++cover_count[d.edges()[k].right];
  }
  for (std::size_t a = 0; a < nv; ++a) {
    if (cover_count[a] > 1) {
      out.push_back({K::kNotAMatching, "vertex " + std::to_string(a)});
    }
    if (cert.duals[a] < 0) {
      out.push_back({K::kNegativeDual, "vertex " + std::to_string(a)});
    }
    if (cert.duals[a] > 0 && cover_count[a] == 0) {
      out.push_back({K::kUnmatchedPositive, "vertex " + std::to_string(a)});
    }
  }
  for (std::size_t k = 0; k < d.edge_count(); ++k) {
    const DoubledEdge& e = d.edges()[k];
    const Weight cover = cert.duals[e.left] + cert.duals[e.right];
    if (cover < e.weight) {
      out.push_back({K::kDualInfeasible, "edge " + std::to_string(k)});
    } else if (is_matched_edge[k] && cover != e.weight) {
      out.push_back({K::kMatchedEdgeSlack, "edge " + std::to_string(k)});
    }
  }
  if (cert.matched_weight(d) != cert.dual_value()) {
    out.push_back({K::kDualityGap,
                   std::to_string(cert.matched_weight(d)) +
                       " != " + std::to_string(cert.dual_value())});
  }
  return out;
}

}  // namespace approxcore

#endif  // APPROXCORE_BIPARTITE_SOLVER_HPP
