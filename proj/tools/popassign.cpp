// Copyright 2026 The Popassign Authors
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

// popassign: popular assignments under partial-order preferences.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "popassign/cli.hpp"

int main(int argc, char** argv) {
  using namespace popassign::cli;
  CLI::App app{"Popular assignments with one-sided partial-order preferences"};
  app.require_subcommand(1);
  int code = kExitError;

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Find a popular assignment");
  s->add_option("instance", solve.instance_path, "Instance JSON")->required();
  s->add_option("--truncate", solve.truncate,
                "Reject once some level reaches this value");
  s->add_flag("--verify", solve.verify, "Re-check the result with the oracles");
  s->add_option("--forced", solve.forced, "Edge agent,object that must be used");
  s->add_option("--forbidden", solve.forbidden,
                "Edge agent,object that must not be used");
  s->callback([&] { code = cmd_solve(solve, std::cout, std::cerr); });

  MatchingArgs matching;
  auto* m = app.add_subcommand(
      "matching", "Find a popular matching, or one popular with a penalty");
  m->add_option("instance", matching.instance_path, "Instance JSON")->required();
  m->add_option("--penalty", matching.penalty, "Penalty kappa (default 1)");
  m->add_flag("--verify", matching.verify, "Re-check against all matchings");
  m->callback([&] { code = cmd_matching(matching, std::cout, std::cerr); });

  MarginArgs margin;
  auto* g = app.add_subcommand(
      "margin", "Bounded-margin search or exact margin of an assignment");
  g->add_option("instance", margin.instance_path, "Instance JSON")->required();
  g->add_option("--k", margin.k, "Margin budget");
  g->add_option("--evaluate", margin.evaluate_path, "Assignment JSON to evaluate");
  g->add_option("--parallel-branches", margin.parallel_branches,
                "Worker threads for the load branches");
  g->add_flag("--verify", margin.verify, "Re-check the result with the oracles");
  g->callback([&] { code = cmd_margin(margin, std::cout, std::cerr); });

  HousingArgs housing;
  auto* h = app.add_subcommand("housing", "Find a popular allocation");
  h->add_option("market", housing.market_path, "Housing market JSON")->required();
  h->add_flag("--verify", housing.verify, "Re-check the result with the oracles");
  h->callback([&] { code = cmd_housing(housing, std::cout, std::cerr); });

  GenArgs gen;
  auto* r = app.add_subcommand("gen", "Generate a seeded random instance");
  r->add_option("--agents", gen.options.agents, "Number of agents");
  r->add_option("--objects", gen.options.objects, "Number of objects");
  r->add_option("--density", gen.options.density, "Edge probability");
  r->add_option("--pref-style", gen.style, "strict, weak, partial or none");
  r->add_option("--pair-density", gen.options.pair_density,
                "Pair probability for partial preferences");
  r->add_option("--seed", gen.options.seed, "Random seed");
  r->add_option("--correlation", gen.options.correlation,
                "Weight of a shared object ranking, in [0, 1]");
  r->add_flag("--plant-perfect", gen.options.plant_perfect_matching,
              "Add a random perfect matching to the edges");
  r->add_flag("--market", gen.market, "Generate a housing market instead");
  r->callback([&] { code = cmd_gen(gen, std::cout, std::cerr); });

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check an assignment and certificate");
  v->add_option("instance", verify.instance_path, "Instance JSON")->required();
  v->add_option("matching", verify.matching_path,
                "Assignment JSON or a solve report")->required();
  v->add_option("--certificate", verify.certificate_path,
                "Certificate JSON or a solve report");
  v->add_option("--k", verify.k, "Margin budget (default 0)");
  v->callback([&] { code = cmd_verify(verify, std::cout, std::cerr); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }
  return code;
}
