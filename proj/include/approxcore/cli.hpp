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

// The `approxcore` command line: solve, verify, gen, gap.
//
// Exit codes: 0 success, 1 verification violations (or a failed --check),
// 2 usage or input errors, 3 an exhaustive bound was exceeded.

#ifndef APPROXCORE_CLI_HPP
#define APPROXCORE_CLI_HPP

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "approxcore/errors.hpp"
#include "approxcore/instance.hpp"
#include "approxcore/json_io.hpp"
#include "approxcore/mechanism.hpp"
#include "approxcore/verification.hpp"

namespace approxcore {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolations = 1,
  kExitUsage = 2,
  kExitBound = 3,
};

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline GameInstance load_instance(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_instance(text, path);
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

inline Money parse_fraction_flag(const std::string& flag, const std::string& text) {
  auto m = parse_money(text);
  if (!m) throw UsageError(flag + ": not a fraction: " + text);
  return *m;
}

inline void print_solve_table(std::ostream& out, const GameInstance& g,
                              const ImputationResult& r) {
  out << std::left << std::setw(8) << "agent" << std::setw(14) << "cover"
      << std::setw(10) << "factor" << "share\n";
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    out << std::setw(8) << i + 1 << std::setw(14) << to_string(r.cover[i])
        << std::setw(10) << to_string(r.f.f[i]) << to_string(r.c[i]) << '\n';
  }
  out << "matching:";
  for (std::size_t k : r.matching) {
    out << " (" << g.edge(k).u + 1 << ',' << g.edge(k).v + 1 << ')';
  }
  out << "\nallocated " << to_string(r.allocated) << ", w(T) "
      << to_string(r.matching_weight) << ", fractional optimum "
      << to_string(r.worth_fractional) << ", factor guarantee "
      << to_string(r.factor_guarantee) << '\n';
}

inline void emit_instance(const GameInstance& g, const std::string& output,
                          std::ostream& out, std::ostream& err) {
  const std::string summary = g.name() + ": " + std::to_string(g.vertex_count()) +
                              " vertices, " + std::to_string(g.edge_count()) +
                              " edges";
  if (output.empty()) {
    out << serialize_instance(g);
    err << summary << '\n';
    return;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw UsageError("cannot write " + output);
  file << serialize_instance(g);
  out << "wrote " << summary << " to " << output << '\n';
}

}  // namespace detail

/// Runs one CLI invocation; `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Approximate core imputations for matching games", "approxcore"};
  app.require_subcommand(1);

  std::string instance_path, imputation_path, output_path;
  bool json_flag = false, check_flag = false;
  std::string alpha_text = "2/3", mode_text = "exhaustive";
  std::size_t max_n = kDefaultMaxVertices, brute_max_edges = kDefaultMaxEdges;

  auto* solve = app.add_subcommand("solve", "Compute the approximate core imputation");
  solve->add_option("instance", instance_path, "Instance file")->required();
  solve->add_flag("--json", json_flag, "Emit JSON");
  solve->add_flag("--check", check_flag, "Re-verify every invariant before emitting");

  auto* verify = app.add_subcommand("verify", "Check an imputation against the approximate core");
  verify->add_option("instance", instance_path, "Instance file")->required();
  verify->add_option("imputation", imputation_path, "Imputation JSON file")->required();
  verify->add_option("--alpha", alpha_text, "Core level as a fraction")->capture_default_str();
  verify->add_option("--mode", mode_text, "edges or exhaustive")
      ->check(CLI::IsMember({"edges", "exhaustive"}))
      ->capture_default_str();
  verify->add_option("--max-n", max_n, "Vertex bound for exhaustive mode")->capture_default_str();

  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->require_subcommand(1);
  std::size_t gen_n = 0, gen_k = 0;
  Weight gen_weight = 1, gen_max_weight = 10;
  bool gen_connected = false, gen_bipartite = false;
  std::string gen_p = "1/2";
  std::uint64_t gen_seed = 0;
  auto* gen_gap = gen->add_subcommand("gap", "Integrality-gap family G_n");
  gen_gap->add_option("--n", gen_n, "Family index")->required();
  gen_gap->add_flag("--connected", gen_connected, "Join the i_l by a weight-0 clique");
  gen_gap->add_option("-o,--output", output_path, "Output file (default stdout)");
  auto* gen_cycle = gen->add_subcommand("cycle", "Odd cycle C_{2k+1}");
  gen_cycle->add_option("--k", gen_k, "Half length")->required();
  gen_cycle->add_option("--weight", gen_weight, "Edge weight")->capture_default_str();
  gen_cycle->add_option("-o,--output", output_path, "Output file (default stdout)");
  auto* gen_random_cmd = gen->add_subcommand("random", "Random instance");
  gen_random_cmd->add_option("--n", gen_n, "Vertex count")->required();
  gen_random_cmd->add_option("--p", gen_p, "Edge probability as a fraction")->capture_default_str();
  gen_random_cmd->add_option("--max-weight", gen_max_weight, "Largest weight")->capture_default_str();
  gen_random_cmd->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
  gen_random_cmd->add_flag("--bipartite", gen_bipartite, "Only cross edges between halves");
  gen_random_cmd->add_option("-o,--output", output_path, "Output file (default stdout)");

  auto* gap = app.add_subcommand("gap", "Integrality gap and core non-emptiness");
  gap->add_option("instance", instance_path, "Instance file")->required();
  gap->add_option("--brute-max-edges", brute_max_edges,
                  "Edge bound per component for the integral brute force")
      ->capture_default_str();

  std::vector<const char*> argv{"approxcore"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) {
      const GameInstance g = detail::load_instance(instance_path);
      const MechanismTrace trace = run_mechanism_traced(g);
      if (check_flag) {
        const auto problems = audit_trace(g, trace);
        if (!problems.empty()) {
          for (const auto& p : problems) err << "check failed: " << p << '\n';
          return kExitViolations;
        }
      }
      if (json_flag) {
        out << to_json(g, trace.result).dump(2) << '\n';
      } else {
        detail::print_solve_table(out, g, trace.result);
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      const GameInstance g = detail::load_instance(instance_path);
      std::vector<Money> c;
      try {
        c = parse_imputation(detail::read_file(imputation_path));
      } catch (const std::invalid_argument& e) {
        throw detail::UsageError(imputation_path + ": " + e.what());
      }
      const Money alpha = detail::parse_fraction_flag("--alpha", alpha_text);
      if (alpha <= 0 || alpha > 1) throw detail::UsageError("--alpha must lie in (0, 1]");
      if (c.size() != g.vertex_count()) {
        throw detail::UsageError("imputation has " + std::to_string(c.size()) +
                                 " values, instance has " +
                                 std::to_string(g.vertex_count()) + " agents");
      }
      const CheckMode mode =
          mode_text == "edges" ? CheckMode::kEdges : CheckMode::kExhaustive;
      const CoalitionReport report = check_core(g, c, alpha, mode, max_n);
      out << to_json(report).dump(2) << '\n';
      return report.passed() ? kExitOk : kExitViolations;
    }

    if (gen->parsed()) {
      GameInstance g;
      if (gen_gap->parsed()) {
        if (gen_n == 0) throw detail::UsageError("--n must be >= 1");
        g = gen_gap_family(gen_n, gen_connected);
      } else if (gen_cycle->parsed()) {
        if (gen_k == 0) throw detail::UsageError("--k must be >= 1");
        if (gen_weight < 0 || gen_weight > kMaxWeight) {
          throw detail::UsageError("--weight out of range");
        }
        g = gen_odd_cycle(gen_k, gen_weight);
      } else {
        const Money p = detail::parse_fraction_flag("--p", gen_p);
        if (p < 0 || p > 1) throw detail::UsageError("--p must lie in [0, 1]");
        const BigInt num = numerator_of(p), den = denominator_of(p);
        if (den > std::numeric_limits<std::uint64_t>::max() / 2) {
          throw detail::UsageError("--p denominator too large");
        }
        if (gen_max_weight < 1 || gen_max_weight > kMaxWeight) {
          throw detail::UsageError("--max-weight out of range");
        }
        g = gen_random({gen_n, num.convert_to<std::uint64_t>(),
                        den.convert_to<std::uint64_t>(), gen_max_weight, gen_seed,
                        gen_bipartite});
      }
      detail::emit_instance(g, output_path, out, err);
      return kExitOk;
    }

    if (gap->parsed()) {
      const GameInstance g = detail::load_instance(instance_path);
      const GapReport report = integrality_gap(g, brute_max_edges);
      out << to_json(report).dump() << '\n';
      if (!report.opt_integral) {
        err << "integral optimum refused: a component exceeds " << brute_max_edges
            << " edges\n";
        return kExitBound;
      }
      return kExitOk;
    }
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BoundExceeded& e) {
    err << "bound exceeded: " << e.what() << '\n';
    return kExitBound;
  } catch (const InvariantError& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kExitViolations;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace approxcore

#endif  // APPROXCORE_CLI_HPP
