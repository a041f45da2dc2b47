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

#include "approxcore/bipartite_solver.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <vector>

#include "oracles.hpp"

namespace approxcore {
namespace {

// Oracle for the doubled graph: brute-force DP over left vertices.
Weight DoubledOptimum(const DoubledGraph& d) {
  const std::size_t n = d.original_vertex_count();
  std::vector<std::vector<Weight>> w(n, std::vector<Weight>(n, -1));
  for (const DoubledEdge& e : d.edges()) w[e.left][e.right - n] = e.weight;
  return testing::bipartite_matching_dp(n, n, w);
}

std::size_t ComponentCount(std::size_t vertices,
                           const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<std::size_t> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a];
    return a;
  };
  std::size_t count = vertices;
  for (auto [a, b] : edges) {
    const auto ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --count;
    }
  }
  return count;
}

std::vector<std::pair<Vertex, Vertex>> Pairs(const DoubledGraph& d) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& e : d.edges()) out.emplace_back(e.left, e.right);
  return out;
}

TEST(DoubleGraphTest, TriangleBecomesSixCycle) {
  const DoubledGraph d = double_graph(gen_odd_cycle(1, 1));
  EXPECT_EQ(d.vertex_count(), 6u);
  ASSERT_EQ(d.edge_count(), 6u);
  std::vector<int> degree(6, 0);
  for (const DoubledEdge& e : d.edges()) {
    EXPECT_TRUE(d.is_left(e.left));
    EXPECT_FALSE(d.is_left(e.right));
    EXPECT_NE(d.original_of(e.left), d.original_of(e.right));
    EXPECT_EQ(e.weight, 1);
    ++degree[e.left];
    ++degree[e.right];
  }
  for (int deg : degree) EXPECT_EQ(deg, 2);
  EXPECT_EQ(ComponentCount(6, Pairs(d)), 1u);  // connected, 2-regular: C6
}

TEST(DoubleGraphTest, SingleEdge) {
  const DoubledGraph d = double_graph(GameInstance(2, {{0, 1, 5}}));
  ASSERT_EQ(d.edge_count(), 2u);
  EXPECT_EQ(d.edges()[0].left, d.left_of(0));
  EXPECT_EQ(d.edges()[0].right, d.right_of(1));
  EXPECT_EQ(d.edges()[1].left, d.left_of(1));
  EXPECT_EQ(d.edges()[1].right, d.right_of(0));
  EXPECT_EQ(d.edges()[0].weight, 5);
  EXPECT_EQ(d.edges()[1].weight, 5);
}

TEST(DoubleGraphTest, Empty) {
  const DoubledGraph d = double_graph(GameInstance());
  EXPECT_EQ(d.vertex_count(), 0u);
  EXPECT_EQ(d.edge_count(), 0u);
}

TEST(DoubleGraphTest, OddCycleDoublesToOneLongCycle) {
  for (std::size_t k = 1; k <= 6; ++k) {
    const DoubledGraph d = double_graph(gen_odd_cycle(k, 2));
    EXPECT_EQ(d.vertex_count(), 4 * k + 2);
    EXPECT_EQ(d.edge_count(), 4 * k + 2);
    EXPECT_EQ(ComponentCount(d.vertex_count(), Pairs(d)), 1u);
  }
}

TEST(DoubleGraphTest, BipartiteDoublesToTwoCopies) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const GameInstance g = gen_random({8, 1, 2, 5, seed, true});
    std::vector<std::pair<Vertex, Vertex>> orig;
    for (const Edge& e : g.edges()) orig.emplace_back(e.u, e.v);
    const DoubledGraph d = double_graph(g);
    EXPECT_EQ(ComponentCount(d.vertex_count(), Pairs(d)),
              2 * ComponentCount(g.vertex_count(), orig));
  }
}

TEST(SolveBipartiteTest, DoubledTriangle) {
  const DoubledGraph d = double_graph(gen_odd_cycle(1, 1));
  ASSERT_EQ(DoubledOptimum(d), 3);  // oracle: perfect matching of C6
  const PrimalDualCertificate cert = solve_bipartite(d);
  EXPECT_EQ(cert.matched_weight(d), 3);
  EXPECT_EQ(cert.dual_value(), 3);
  EXPECT_EQ(cert.matched_edges.size(), 3u);
  EXPECT_TRUE(check_certificate(d, cert).empty());
}

TEST(SolveBipartiteTest, DoubledSingleEdge) {
  const DoubledGraph d = double_graph(GameInstance(2, {{0, 1, 5}}));
  ASSERT_EQ(DoubledOptimum(d), 10);
  const PrimalDualCertificate cert = solve_bipartite(d);
  EXPECT_EQ(cert.matched_weight(d), 10);
  EXPECT_EQ(cert.matched_edges, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(cert.duals[0] + cert.duals[3], 5);
  EXPECT_EQ(cert.duals[1] + cert.duals[2], 5);
  EXPECT_TRUE(check_certificate(d, cert).empty());
}

TEST(SolveBipartiteTest, Empty) {
  const DoubledGraph d = double_graph(GameInstance(3, {}));
  const PrimalDualCertificate cert = solve_bipartite(d);
  EXPECT_TRUE(cert.matched_edges.empty());
  EXPECT_EQ(cert.duals, std::vector<Weight>(6, 0));
  EXPECT_TRUE(check_certificate(d, cert).empty());
}

TEST(SolveBipartiteTest, ZeroWeightEdgesCarryNoDual) {
  const GameInstance g(4, {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}});
  const DoubledGraph d = double_graph(g);
  const PrimalDualCertificate cert = solve_bipartite(d);
  EXPECT_EQ(cert.matched_weight(d), 0);
  EXPECT_EQ(cert.duals, std::vector<Weight>(8, 0));
  EXPECT_TRUE(check_certificate(d, cert).empty());
}

TEST(SolveBipartiteTest, DeterministicOutput) {
  const GameInstance g = gen_random({12, 1, 2, 6, 5, false});
  const DoubledGraph d = double_graph(g);
  const auto a = solve_bipartite(d), b = solve_bipartite(d);
  EXPECT_EQ(a.matched_edges, b.matched_edges);
  EXPECT_EQ(a.duals, b.duals);
}

TEST(SolveBipartiteTest, MatchesBruteForceAndCertifies) {
  for (const GameInstance& g : testing::small_corpus(300, 8)) {
    const DoubledGraph d = double_graph(g);
    const PrimalDualCertificate cert = solve_bipartite(d);
    ASSERT_EQ(cert.matched_weight(d), DoubledOptimum(d)) << serialize_instance(g);
    const auto violations = check_certificate(d, cert);
    EXPECT_TRUE(violations.empty()) << serialize_instance(g) << " "
                                    << to_string(violations.front().kind);
    for (Weight y : cert.duals) EXPECT_GE(y, 0);
  }
}

bool HasKind(const std::vector<CertificateViolation>& v,
             CertificateViolation::Kind kind) {
  for (const auto& x : v) {
    if (x.kind == kind) return true;
  }
  return false;
}

TEST(CheckCertificateTest, DetectsLoweredDual) {
  const DoubledGraph d = double_graph(GameInstance(2, {{0, 1, 5}}));
  PrimalDualCertificate cert = solve_bipartite(d);
  const std::size_t a = cert.duals[0] > 0 ? 0 : 3;
  --cert.duals[a];
  const auto v = check_certificate(d, cert);
  EXPECT_TRUE(HasKind(v, CertificateViolation::Kind::kDualInfeasible));
  EXPECT_TRUE(HasKind(v, CertificateViolation::Kind::kDualityGap));
}

TEST(CheckCertificateTest, DetectsSlackMatchedEdge) {
  const DoubledGraph d = double_graph(GameInstance(2, {{0, 1, 5}}));
  PrimalDualCertificate cert = solve_bipartite(d);
  ++cert.duals[0];
  EXPECT_TRUE(HasKind(check_certificate(d, cert),
                      CertificateViolation::Kind::kMatchedEdgeSlack));
}

TEST(CheckCertificateTest, DetectsUnmatchedPositiveDual) {
  const DoubledGraph d = double_graph(GameInstance(3, {{0, 1, 5}}));
  PrimalDualCertificate cert = solve_bipartite(d);
  cert.duals[2] = 1;  // vertex 2' is isolated and unmatched
  EXPECT_TRUE(HasKind(check_certificate(d, cert),
                      CertificateViolation::Kind::kUnmatchedPositive));
}

TEST(CheckCertificateTest, DetectsNonMatchingAndMalformed) {
  const DoubledGraph d = double_graph(gen_odd_cycle(1, 1));
  PrimalDualCertificate cert = solve_bipartite(d);
  cert.matched_edges = {0, 1, 2, 3, 4, 5};
  EXPECT_TRUE(HasKind(check_certificate(d, cert),
                      CertificateViolation::Kind::kNotAMatching));
  cert.matched_edges = {99};
  EXPECT_TRUE(HasKind(check_certificate(d, cert),
                      CertificateViolation::Kind::kMalformed));
  cert.duals.pop_back();
  EXPECT_TRUE(HasKind(check_certificate(d, cert),
                      CertificateViolation::Kind::kMalformed));
}

TEST(SolveBipartiteTest, LargeInstanceCertifies) {
  const GameInstance g = gen_random({150, 1, 3, 1000, 17, false});
  const DoubledGraph d = double_graph(g);
  EXPECT_TRUE(check_certificate(d, solve_bipartite(d)).empty());
}

}  // namespace
}  // namespace approxcore
