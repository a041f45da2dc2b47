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

#ifndef APPROXCORE_INSTANCE_HPP
#define APPROXCORE_INSTANCE_HPP

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <istream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "approxcore/errors.hpp"
#include "approxcore/rational.hpp"

namespace approxcore {

using Vertex = std::uint32_t;
using Weight = std::int64_t;

/// Largest accepted edge weight. Keeps every doubled-graph sum well inside
/// 64 bits for any instance the O(n^3) solver can handle.
inline constexpr Weight kMaxWeight = 1'000'000'000'000;

struct Edge {
  Vertex u;
  Vertex v;
  Weight weight;

  bool touches(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A matching game: agents are vertices, an edge's weight is the profit the
/// two agents generate by trading. Immutable once constructed.
class GameInstance {
 public:
  GameInstance() = default;

  /// Throws std::invalid_argument on self-loops, duplicate pairs, negative or
  /// oversized weights and out-of-range endpoints.
  GameInstance(std::size_t vertex_count, std::vector<Edge> edges,
               std::string name = {})
      : vertex_count_(vertex_count), edges_(std::move(edges)),
        name_(std::move(name)) {
    if (auto problem = first_problem(vertex_count_, edges_)) {
      throw std::invalid_argument(problem->second);
    }
  }

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_.at(index); }
  const std::string& name() const { return name_; }

  Weight total_weight() const {
    Weight total = 0;
    for (const Edge& e : edges_) total += e.weight;
    return total;
  }

  /// Incident edge indices per vertex, in ascending edge-index order.
  std::vector<std::vector<std::size_t>> incidence() const {
    std::vector<std::vector<std::size_t>> inc(vertex_count_);
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      inc[edges_[k].u].push_back(k);
      inc[edges_[k].v].push_back(k);
    }
    return inc;
  }

  /// Equality ignores the name.
  friend bool operator==(const GameInstance& a, const GameInstance& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

  /// Index of the first offending edge and a message, or nullopt if valid.
  static std::optional<std::pair<std::size_t, std::string>> first_problem(
      std::size_t vertex_count, const std::vector<Edge>& edges) {
    std::set<std::pair<Vertex, Vertex>> seen;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const Edge& e = edges[k];
      if (e.u >= vertex_count || e.v >= vertex_count) {
        return std::pair{k, "vertex id out of range"};
      }
      if (e.u == e.v) return std::pair{k, "self-loop"};
      if (e.weight < 0) return std::pair{k, "negative weight"};
      if (e.weight > kMaxWeight) return std::pair{k, "weight too large"};
      if (!seen.insert(std::minmax(e.u, e.v)).second) {
        return std::pair{k, "duplicate edge"};
      }
    }
    return std::nullopt;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::string name_;
};

/// A set of agents, stored sorted and without repeats.
struct Coalition {
  std::vector<Vertex> members;

  static Coalition of(std::vector<Vertex> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return Coalition{std::move(members)};
  }

  static Coalition everyone(const GameInstance& g) {
    Coalition s;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
      s.members.push_back(static_cast<Vertex>(i));
    }
    return s;
  }

  bool within(const GameInstance& g) const {
    return std::all_of(members.begin(), members.end(),
                       [&](Vertex i) { return i < g.vertex_count(); });
  }
};

// ---------------------------------------------------------------------------
// Instance file format
//
//   # comment
//   p mg <n> <m>
//   e <u> <v> <w>       (m lines, 1-based endpoints)
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
std::optional<T> parse_number(std::string_view token) {
  T value{};
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    return std::nullopt;
  }
  return value;
}

}  // namespace detail

inline GameInstance parse_instance(std::istream& in, std::string name = {}) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  std::set<std::pair<Vertex, Vertex>> seen;

  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto tokens = detail::split_ws(raw);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!header) {
      if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != "mg") {
        throw ParseError(line_no, "malformed header, expected 'p mg <n> <m>'");
      }
      auto n = detail::parse_number<std::size_t>(tokens[2]);
      auto m = detail::parse_number<std::size_t>(tokens[3]);
      if (!n || !m) throw ParseError(line_no, "malformed header counts");
      if (*n > 0xFFFFFFFFull) throw ParseError(line_no, "too many vertices");
      header = std::pair{*n, *m};
      continue;
    }

    if (tokens[0] != "e" || tokens.size() != 4) {
      throw ParseError(line_no, "malformed edge line, expected 'e <u> <v> <w>'");
    }
    if (edges.size() == header->second) {
      throw ParseError(line_no, "more edge lines than declared in header");
    }
    auto u = detail::parse_number<std::uint64_t>(tokens[1]);
    auto v = detail::parse_number<std::uint64_t>(tokens[2]);
    if (!u || !v) throw ParseError(line_no, "malformed vertex id");
    if (*u < 1 || *u > header->first || *v < 1 || *v > header->first) {
      throw ParseError(line_no, "vertex id out of range");
    }
    if (tokens[3].front() == '-') throw ParseError(line_no, "negative weight");
    auto w = detail::parse_number<Weight>(tokens[3]);
    if (!w) throw ParseError(line_no, "malformed weight");
    if (*w > kMaxWeight) throw ParseError(line_no, "weight too large");
    if (*u == *v) throw ParseError(line_no, "self-loop");
    const auto a = static_cast<Vertex>(*u - 1);
    const auto b = static_cast<Vertex>(*v - 1);
    if (!seen.insert(std::minmax(a, b)).second) {
      throw ParseError(line_no, "duplicate edge");
    }
    edges.push_back(Edge{a, b, *w});
    edge_lines.push_back(line_no);
  }

  if (!header) throw ParseError(line_no + 1, "missing 'p mg' header");
  if (edges.size() != header->second) {
    throw ParseError(line_no + 1, "expected " + std::to_string(header->second) +
                                      " edges, found " +
                                      std::to_string(edges.size()));
  }
  return GameInstance(header->first, std::move(edges), std::move(name));
}

inline GameInstance parse_instance(const std::string& text,
                                   std::string name = {}) {
  std::istringstream in(text);
  return parse_instance(in, std::move(name));
}

inline std::string serialize_instance(const GameInstance& g) {
  std::ostringstream out;
  out << "p mg " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.weight << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

/// The integrality-gap family: 2n disjoint unit triangles (i_l, j_l, k_l) on
/// vertices 3l, 3l+1, 3l+2. With `connected`, the 2n vertices i_l are joined
/// by a clique of weight-0 edges.
inline GameInstance gen_gap_family(std::size_t n, bool connected) {
  if (n == 0) throw std::invalid_argument("gap family requires n >= 1");
  const std::size_t triangles = 2 * n;
  std::vector<Edge> edges;
  for (std::size_t l = 0; l < triangles; ++l) {
    const auto i = static_cast<Vertex>(3 * l);
    edges.push_back({i, i + 1, 1});
    edges.push_back({i + 1, i + 2, 1});
    edges.push_back({i, i + 2, 1});
  }
  if (connected) {
    for (std::size_t a = 0; a < triangles; ++a) {
      for (std::size_t b = a + 1; b < triangles; ++b) {
        edges.push_back({static_cast<Vertex>(3 * a), static_cast<Vertex>(3 * b), 0});
      }
    }
  }
  return GameInstance(3 * triangles, std::move(edges),
                      "G_" + std::to_string(n));
}

/// Cycle i_0 i_1 ... i_2k with every edge of the given weight.
inline GameInstance gen_odd_cycle(std::size_t k, Weight weight) {
  if (k == 0) throw std::invalid_argument("odd cycle requires k >= 1");
  const std::size_t len = 2 * k + 1;
  std::vector<Edge> edges;
  for (std::size_t t = 0; t + 1 < len; ++t) {
    edges.push_back({static_cast<Vertex>(t), static_cast<Vertex>(t + 1), weight});
  }
  edges.push_back({0, static_cast<Vertex>(len - 1), weight});
  return GameInstance(len, std::move(edges), "C_" + std::to_string(len));
}

struct RandomSpec {
  std::size_t n = 0;
  std::uint64_t p_numerator = 1;  // edge probability p_numerator/p_denominator
  std::uint64_t p_denominator = 2;
  Weight max_weight = 1;
  std::uint64_t seed = 0;
  bool bipartite = false;
};

/// Erdos-Renyi style instance; weights uniform in 1..max_weight. Bipartite
/// instances split vertices into [0, n/2) and [n/2, n) and only draw cross
/// pairs. Output is a pure function of the spec on every platform: the
/// mt19937_64 stream is reduced by modulo rather than through a standard
/// distribution, whose algorithm is implementation-defined.
inline GameInstance gen_random(const RandomSpec& spec) {
  if (spec.p_denominator == 0 || spec.p_numerator > spec.p_denominator) {
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  }
  if (spec.max_weight < 1 || spec.max_weight > kMaxWeight) {
    throw std::invalid_argument("max weight must lie in [1, 10^12]");
  }
  std::mt19937_64 rng(spec.seed);
  const std::size_t half = spec.n / 2;
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < spec.n; ++u) {
    for (std::size_t v = u + 1; v < spec.n; ++v) {
      if (spec.bipartite && (u < half) == (v < half)) continue;
      if (rng() % spec.p_denominator >= spec.p_numerator) continue;
      const auto w = static_cast<Weight>(
          1 + rng() % static_cast<std::uint64_t>(spec.max_weight));
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), w});
    }
  }
  return GameInstance(spec.n, std::move(edges), "random");
}

}  // namespace approxcore

#endif  // APPROXCORE_INSTANCE_HPP
