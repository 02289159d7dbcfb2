// Copyright 2026 The compnum Authors
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

// Command implementations behind the `compnum` executable. Each returns the
// process exit code and writes to the given streams.

#pragma once

#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "compnum/bounds.hpp"
#include "compnum/competition.hpp"
#include "compnum/generators.hpp"
#include "compnum/io.hpp"
#include "compnum/report.hpp"
#include "compnum/verify.hpp"

namespace compnum::cli {

enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kInputError = 2, kResourceCap = 3 };

inline void warn_cap(std::size_t cap, std::ostream& err) {
  if (cap > kDefaultSolverCap)
    err << "warning: --cap " << cap << " exceeds the default " << kDefaultSolverCap
        << "; exact search time grows factorially with n + k\n";
}

inline std::optional<Graph> load_graph(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot open '" << path << "'\n";
    return std::nullopt;
  }
  try {
    return read_edge_list(in);
  } catch (const MalformedInput& e) {
    err << "error: " << path << ": " << e.what() << '\n';
    return std::nullopt;
  }
}

struct ComputeOptions {
  std::string input;
  bool exact = false;
  bool json = false;
  std::size_t cap = kDefaultSolverCap;
};

/// Path of the witness digraph written next to the input by `compute --exact`.
inline std::string witness_path(const std::string& input) { return input + ".dig"; }

inline int cmd_compute(const ComputeOptions& opt, std::ostream& out, std::ostream& err) {
  warn_cap(opt.cap, err);
  auto g = load_graph(opt.input, err);
  if (!g) return kInputError;
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.input_path = opt.input;
  r.n = g->n();
  r.m = g->m();
  std::optional<Realization> witness;
  try {
    r.verdict = is_competitively_tight(*g, ClassifyOptions{opt.exact, opt.cap}, &r.bounds);
    if (opt.exact) {
      CompetitionResult exact = competition_number_exact(*g, opt.cap);
      r.bounds.exact = static_cast<Count>(exact.k);
      witness = std::move(exact.witness);
    }
  } catch (const UnsupportedSize& e) {
    err << "error: " << e.what() << " (raise --cap or drop --exact)\n";
    return kResourceCap;
  }
  if (witness) {
    std::string path = witness_path(opt.input);
    std::ofstream f(path, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << path << "'\n";
      return kInputError;
    }
    write_realization(f, *witness);
    r.realization = path;
  }
  r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (opt.json) {
    out << to_json(r).dump(2) << '\n';
    return kOk;
  }
  out << "graph: " << r.input_path << " (n = " << r.n << ", m = " << r.m << ")\n";
  out << "theta_E = " << r.bounds.theta_E << "  [theta_E(E_tri;G) = " << r.bounds.theta_E_restricted_triangle
      << ", |E_not_tri| = " << r.bounds.not_in_triangle_count << "]\n";
  out << "bounds: " << r.bounds.opsut_lower << " <= k <= " << r.bounds.main_upper << " (clique-cover upper "
      << r.bounds.opsut_upper << ")\n";
  if (r.bounds.exact) out << "k = " << *r.bounds.exact << '\n';
  out << "verdict: " << status_label(r.verdict.status) << " [" << rule_label(r.verdict.rule) << "] "
      << r.verdict.detail << '\n';
  if (r.realization) out << "witness: " << *r.realization << '\n';
  return kOk;
}

struct GenerateOptions {
  std::string family;
  std::optional<std::size_t> t, n, p, m, a, b;
  std::string out;
};

inline const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"complete", "edgeless",         "cycle", "path",
                                              "bipartite", "path_plus_clique", "gtn",   "circulant"};
  return names;
}

/// Builds the requested family; throws InvalidArgument on unknown family,
/// missing parameters or invalid sizes.
inline std::pair<Graph, std::string> build_family(const GenerateOptions& opt) {
  auto need = [&](const std::optional<std::size_t>& v, const char* name) {
    if (!v) throw InvalidArgument("family '" + opt.family + "' requires --" + name);
    return *v;
  };
  const std::string& f = opt.family;
  std::ostringstream d;
  d << f;
  Graph g;
  if (f == "complete") {
    g = complete(need(opt.n, "n"));
    d << " n=" << *opt.n;
  } else if (f == "edgeless") {
    g = edgeless(need(opt.n, "n"));
    d << " n=" << *opt.n;
  } else if (f == "cycle") {
    g = cycle(need(opt.n, "n"));
    d << " n=" << *opt.n;
  } else if (f == "path") {
    g = path(need(opt.n, "n"));
    d << " n=" << *opt.n;
  } else if (f == "bipartite") {
    g = complete_bipartite(need(opt.a, "a"), need(opt.b, "b"));
    d << " a=" << *opt.a << " b=" << *opt.b;
  } else if (f == "path_plus_clique") {
    g = path_plus_clique(need(opt.n, "n"), need(opt.m, "m"));
    d << " n=" << *opt.n << " m=" << *opt.m;
  } else if (f == "gtn") {
    g = g_tn(need(opt.t, "t"), need(opt.n, "n"));
    d << " t=" << *opt.t << " n=" << *opt.n;
  } else if (f == "circulant") {
    g = circulant(need(opt.n, "n"), need(opt.p, "p"));
    d << " n=" << *opt.n << " p=" << *opt.p;
  } else {
    throw InvalidArgument("unknown family '" + f + "'");
  }
  return {std::move(g), d.str()};
}

inline int cmd_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err) {
  std::pair<Graph, std::string> built;
  try {
    built = build_family(opt);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) {
    err << "error: cannot write '" << opt.out << "'\n";
    return kInputError;
  }
  write_edge_list(f, built.first, {built.second});
  out << "wrote " << opt.out << ": " << built.second << " (n = " << built.first.n() << ", m = " << built.first.m()
      << ")\n";
  return kOk;
}

struct VerifyOptions {
  std::size_t max_n = 5;
  std::vector<std::string> checks;  // empty: all
  std::size_t jobs = 1;
};

inline int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  std::vector<Check> checks;
  if (opt.checks.empty()) checks = all_checks();
  for (const auto& name : opt.checks) {
    auto c = check_from_name(name);
    if (!c) {
      err << "error: unknown check '" << name << "'\n";
      return kInputError;
    }
    checks.push_back(*c);
  }
  VerifySummary s;
  try {
    s = run_verify(opt.max_n, checks, opt.jobs);
  } catch (const UnsupportedSize& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  }
  out << "verified " << s.graphs << " non-isomorphic graphs with 1 <= n <= " << s.max_n << '\n';
  for (const auto& c : s.checks) {
    out << (c.failures == 0 ? "PASS " : "FAIL ") << check_name(c.check) << ": " << c.tested << " tested, "
        << c.failures << " failures\n";
    if (c.first_counterexample) out << "  first counterexample:\n" << *c.first_counterexample;
  }
  for (const auto& [n, counts] : s.tight_census)
    out << "census n=" << n << ": " << counts.first << " tight of " << counts.second << '\n';
  return s.ok() ? kOk : kVerificationFailure;
}

struct RealizeOptions {
  std::string input;
  std::optional<std::size_t> k;
  std::string out;
  std::size_t cap = kDefaultSolverCap;
};

inline int cmd_realize(const RealizeOptions& opt, std::ostream& out, std::ostream& err) {
  warn_cap(opt.cap, err);
  auto g = load_graph(opt.input, err);
  if (!g) return kInputError;
  Realization r;
  try {
    if (opt.k) {
      auto found = decide_k(*g, *opt.k, opt.cap);
      if (!found) {
        err << "error: infeasible: no acyclic digraph realizes the graph with " << *opt.k
            << " isolated vertices (k is below the competition number)\n";
        return kInputError;
      }
      r = std::move(*found);
    } else {
      r = competition_number_exact(*g, opt.cap).witness;
    }
  } catch (const UnsupportedSize& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) {
    err << "error: cannot write '" << opt.out << "'\n";
    return kInputError;
  }
  write_realization(f, r);
  bool ok = verify_realization(*g, r);
  out << "wrote " << opt.out << ": " << r.digraph.n() << " vertices (" << r.extra << " added), "
      << r.digraph.arcs().size() << " arcs\n";
  out << "verification: " << (ok ? "OK" : "FAILED") << '\n';
  return ok ? kOk : kVerificationFailure;
}

}  // namespace compnum::cli
