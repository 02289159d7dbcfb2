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

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "compnum/cli.hpp"

namespace {

template <class T>
void optional_option(CLI::App* app, const std::string& name, std::optional<T>& target, const std::string& help) {
  app->add_option_function<T>(name, [&target](const T& v) { target = v; }, help);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace compnum::cli;
  CLI::App app{"compnum: competition numbers, edge clique covers and competitive tightness"};
  app.require_subcommand(1);

  ComputeOptions compute;
  auto* c = app.add_subcommand("compute", "Compute theta_E, bounds on k(G) and the tightness verdict");
  c->add_option("--input", compute.input, "Edge-list file")->required();
  c->add_flag("--exact", compute.exact, "Run the exact competition-number search and write the witness digraph");
  c->add_flag("--json", compute.json, "Emit the JSON report");
  c->add_option("--cap", compute.cap, "Exact-search limit on n + k");

  GenerateOptions generate;
  auto* g = app.add_subcommand("generate", "Write a graph family in edge-list format");
  g->add_option("family", generate.family, "complete|edgeless|cycle|path|bipartite|path_plus_clique|gtn|circulant")
      ->required();
  optional_option(g, "--t", generate.t, "t parameter (gtn)");
  optional_option(g, "--n", generate.n, "vertex count / n parameter");
  optional_option(g, "--p", generate.p, "p parameter (circulant)");
  optional_option(g, "--m", generate.m, "m parameter (path_plus_clique)");
  optional_option(g, "--a", generate.a, "first part size (bipartite)");
  optional_option(g, "--b", generate.b, "second part size (bipartite)");
  g->add_option("--out", generate.out, "Output file")->required();

  VerifyOptions verify;
  std::string check_list;
  auto* v = app.add_subcommand("verify", "Run property checks over all small non-isomorphic graphs");
  v->add_option("--max-n", verify.max_n, "Largest vertex count")->required();
  v->add_option("--checks", check_list,
                "Comma-separated subset of opsut,main,ecc,trianglefree,onetriangle,twotriangle,tight,isolatedlaw,pendantlaw");
  v->add_option("--jobs", verify.jobs, "Worker threads");

  RealizeOptions realize;
  auto* r = app.add_subcommand("realize", "Write an acyclic digraph whose competition graph is G plus k isolated vertices");
  r->add_option("--input", realize.input, "Edge-list file")->required();
  optional_option(r, "--k", realize.k, "Number of added isolated vertices (default: the competition number)");
  r->add_option("--out", realize.out, "Output digraph file")->required();
  r->add_option("--cap", realize.cap, "Exact-search limit on n + k");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  if (*c) return cmd_compute(compute, std::cout, std::cerr);
  if (*g) return cmd_generate(generate, std::cout, std::cerr);
  if (*v) {
    std::string item;
    for (char ch : check_list + ",") {
      if (ch == ',') {
        if (!item.empty()) verify.checks.push_back(item);
        item.clear();
      } else if (ch != ' ') {
        item.push_back(ch);
      }
    }
    return cmd_verify(verify, std::cout, std::cerr);
  }
  return cmd_realize(realize, std::cout, std::cerr);
}
