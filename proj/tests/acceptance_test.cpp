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

// Acceptance suite: runs every acceptance criterion once and prints one
// PASS/FAIL line per criterion. Exits non-zero when any criterion fails.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <climits>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "popassign/cli.hpp"
#include "popassign/generator.hpp"
#include "popassign/io.hpp"
#include "popassign/oracle.hpp"
#include "popassign/popular.hpp"
#include "popassign/reductions.hpp"
#include "popassign/variants.hpp"
#include "testing/fixtures.hpp"
#include "testing/oracles.hpp"

namespace popassign {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Failure collector for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (first_.empty()) first_ = what;
  }
  bool ok() const { return failures_ == 0; }
  int failures() const { return failures_; }
  const std::string& first() const { return first_; }

 private:
  int failures_ = 0;
  std::string first_;
};

// Every level search run by the suite is audited against the n^2 bound.
struct IterationAudit {
  long runs = 0;
  long violations = 0;
  double worst_ratio = 0.0;

  void record(const SolveOutcome& out, int n) {
    ++runs;
    const long bound = static_cast<long>(n) * n;
    if (out.iterations > std::max(1L, bound)) ++violations;
    if (bound > 0)
      worst_ratio = std::max(worst_ratio, static_cast<double>(out.iterations) / bound);
  }
};

IterationAudit audit;

SolveOutcome solve(const Instance& inst) {
  SolveOutcome out = solve_popular_assignment(inst);
  audit.record(out, inst.num_agents());
  return out;
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() /
                    ("popassign_acceptance_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  fs::path path_;
};

std::string seed_tag(std::uint64_t seed) { return "seed " + std::to_string(seed); }

// 1. No popular assignment on the unanimous complete 3x3 instance.
bool unanimous_complete(std::string& detail) {
  const Instance inst = testing::unanimous_complete(3);
  double best_ms = 1e9;
  bool found = true;
  for (int rep = 0; rep < 5; ++rep) {
    const auto start = Clock::now();
    const SolveOutcome out = solve(inst);
    best_ms = std::min(best_ms, 1000.0 * seconds_since(start));
    found = out.found();
  }
  const bool brute = testing::MarginTable(inst).any_popular();
  detail = std::string("outcome ") + (found ? "found" : "not-found") +
           ", brute force " + (brute ? "popular exists" : "none") + ", " +
           std::to_string(best_ms) + " ms";
  return !found && !brute && best_ms < 1.0;
}

// 2. A popular assignment exists though no popular matching does.
bool assignment_without_matching(std::string& detail) {
  TempDir dir;
  const std::string path =
      dir.write("ex.json", serialize_instance(testing::assignment_not_matching_example()));
  std::ostringstream out, err;
  cli::SolveArgs solve_args{path};
  solve_args.verify = true;
  const int solve_code = cli::cmd_solve(solve_args, out, err);
  std::ostringstream out2;
  const int matching_code = cli::cmd_matching({path}, out2, err);
  detail = "solve exit " + std::to_string(solve_code) + ", matching exit " +
           std::to_string(matching_code);
  return solve_code == cli::kExitFound && matching_code == cli::kExitNotFound;
}

// 3. Final levels on the partial-order example.
bool partial_order_levels(std::string& detail) {
  const Instance inst = testing::partial_order_example();
  const SolveOutcome out = solve(inst);
  if (!out.found()) {
    detail = "not found";
    return false;
  }
  const int x = *inst.find_object("x"), y = *inst.find_object("y");
  const int z = *inst.find_object("z");
  const bool by_absent = !induced_subgraph(inst, out.levels)
                              .has_edge(*inst.find_agent("b"), y);
  detail = "l(x)=" + std::to_string(out.levels[x]) + " l(y)=" +
           std::to_string(out.levels[y]) + " l(z)=" + std::to_string(out.levels[z]) +
           ", (b,y) " + (by_absent ? "absent" : "present");
  return out.levels[x] == 0 && out.levels[y] == 0 && out.levels[z] == 1 && by_absent;
}

// 4. Existence agrees with exhaustive elections.
bool existence_equivalence(std::string& detail) {
  const auto start = Clock::now();
  Check check;
  int found = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    const Instance inst = testing::mixed_instance(n, seed);
    const SolveOutcome out = solve(inst);
    const bool brute = testing::MarginTable(inst).any_popular();
    check.expect(out.found() == brute, seed_tag(seed));
    found += out.found();
  }
  const double secs = seconds_since(start);
  detail = std::to_string(check.failures()) + " disagreements over 500 (" +
           std::to_string(found) + " found), " + std::to_string(secs) + " s" +
           (check.ok() ? "" : "; first " + check.first());
  return check.ok() && secs < 60.0;
}

// 5. LP margin equals brute-force margin.
bool margin_equivalence(std::string& detail) {
  Check check;
  int compared = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const int n = 1 + static_cast<int>(seed % 6);
    const Instance inst = testing::mixed_instance(n, 1000 + seed);
    const auto all = enumerate_perfect_matchings(inst);
    Sampler rng(seed);
    for (int i = 0; i < 3; ++i) {
      const Matching& m = all[rng.below(static_cast<int>(all.size()))];
      const int lp = unpopularity_margin(inst, m).margin;
      const int bf = brute_force_margin(inst, m).margin;
      check.expect(lp == bf, seed_tag(seed));
      ++compared;
    }
  }
  detail = std::to_string(check.failures()) + " disagreements over " +
           std::to_string(compared) + " margins";
  return check.ok();
}

// 6. Found outputs carry valid popularity certificates.
bool certificate_soundness(std::string& detail) {
  Check check;
  int certified = 0;
  for (std::uint64_t seed = 1; seed <= 600; ++seed) {
    const int n = seed <= 500 ? 2 + static_cast<int>(seed % 5)
                              : 10 + static_cast<int>(seed % 40);
    const Instance inst = testing::mixed_instance(n, 2000 + seed);
    const SolveOutcome out = solve(inst);
    if (!out.found()) continue;
    ++certified;
    const CertificateCheck c =
        verify_certificate(inst, out.assignment, out.certificate, 0);
    check.expect(c.ok, seed_tag(seed) + (c.ok ? "" : ": " + c.violations[0]));
  }
  detail = std::to_string(certified - check.failures()) + "/" +
           std::to_string(certified) + " certificates verified" +
           (check.ok() ? "" : "; first " + check.first());
  return check.ok() && certified > 0;
}

// Every strict partial order on k labelled items, as better/worse pairs.
std::vector<std::vector<std::pair<int, int>>> strict_partial_orders(int k) {
  std::vector<std::pair<int, int>> candidates;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) candidates.emplace_back(i, j);
  std::vector<std::vector<std::pair<int, int>>> out;
  for (unsigned mask = 0; mask < (1u << candidates.size()); ++mask) {
    std::set<std::pair<int, int>> rel;
    for (std::size_t c = 0; c < candidates.size(); ++c)
      if (mask >> c & 1) rel.insert(candidates[c]);
    bool ok = true;
    for (auto [i, j] : rel) {
      if (rel.count({j, i})) ok = false;
      for (int l = 0; l < k; ++l)
        if (rel.count({j, l}) && !rel.count({i, l})) ok = false;
    }
    if (ok) out.emplace_back(rel.begin(), rel.end());
  }
  return out;
}

// 7. Final levels never exceed |alpha_b| of any popularity certificate.
bool level_minimality(std::string& detail) {
  Check check;
  long instances = 0, certificates = 0;
  for (int n = 1; n <= 3; ++n) {
    // Per-agent options: a non-empty neighbor set and a partial order on it.
    std::vector<std::pair<std::vector<int>, std::vector<std::pair<int, int>>>> options;
    for (unsigned set = 1; set < (1u << n); ++set) {
      std::vector<int> nbrs;
      for (int b = 0; b < n; ++b)
        if (set >> b & 1) nbrs.push_back(b);
      for (const auto& order : strict_partial_orders(static_cast<int>(nbrs.size()))) {
        std::vector<std::pair<int, int>> pairs;
        for (auto [i, j] : order) pairs.emplace_back(nbrs[i], nbrs[j]);
        options.emplace_back(nbrs, pairs);
      }
    }
    std::vector<int> choice(n, 0);
    const int total = static_cast<int>(options.size());
    while (true) {
      InstanceDraft draft;
      for (int a = 0; a < n; ++a) draft.add_agent("a" + std::to_string(a + 1));
      for (int b = 0; b < n; ++b) draft.add_object("b" + std::to_string(b + 1));
      for (int a = 0; a < n; ++a) {
        for (int b : options[choice[a]].first) draft.add_edge(a, b);
        for (auto [x, y] : options[choice[a]].second) draft.prefer(a, x, y);
      }
      const Instance inst = draft.build();
      const testing::MarginTable table(inst);
      if (!table.assignments.empty() && table.any_popular()) {
        ++instances;
        const SolveOutcome out = solve(inst);
        check.expect(out.found(), "instance not solved");
        // Popularity certificates: alpha_b in [-(n-1), 0], alpha_a fixed by
        // the zero load on matched edges.
        for (const Matching& m : table.popular()) {
          std::vector<int> obj(n, -(n - 1));
          while (true) {
            DualCertificate alpha(n, n);
            alpha.object = obj;
            for (int a = 0; a < n; ++a) alpha.agent[a] = -obj[m.object_of(a)];
            if (verify_certificate(inst, m, alpha, 0).ok) {
              ++certificates;
              for (int b = 0; b < n; ++b)
                check.expect(out.levels[b] <= -obj[b], "level exceeds |alpha_b|");
            }
            int pos = 0;
            while (pos < n && obj[pos] == 0) obj[pos++] = -(n - 1);
            if (pos == n) break;
            ++obj[pos];
          }
        }
      }
      int pos = 0;
      while (pos < n && choice[pos] == total - 1) choice[pos++] = 0;
      if (pos == n) break;
      ++choice[pos];
    }
  }
  detail = std::to_string(check.failures()) + " violations over " +
           std::to_string(instances) + " instances, " +
           std::to_string(certificates) + " certificates";
  return check.ok() && certificates > 0;
}

// 8. k-margin search against exhaustive margin minimization.
bool k_margin(std::string& detail) {
  const auto start = Clock::now();
  Check check;
  std::map<int, int> found_by_k;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    const Instance inst = testing::mixed_instance(n, 3000 + seed);
    const int min_margin = testing::MarginTable(inst).min_margin();
    for (int k = 0; k <= 2; ++k) {
      const KMarginOutcome out = solve_k_margin(inst, k);
      check.expect(out.found() == (min_margin <= k),
                   seed_tag(seed) + " k " + std::to_string(k));
      if (!out.found()) continue;
      ++found_by_k[k];
      check.expect(brute_force_margin(inst, out.outcome.assignment).margin <= k,
                   seed_tag(seed) + " margin above k");
      check.expect(out.outcome.certificate.sum() <= k, seed_tag(seed) + " sum above k");
    }
  }
  const double secs = seconds_since(start);
  detail = std::to_string(check.failures()) + " disagreements; found at k=0/1/2: " +
           std::to_string(found_by_k[0]) + "/" + std::to_string(found_by_k[1]) + "/" +
           std::to_string(found_by_k[2]) + " of 200, " + std::to_string(secs) + " s" +
           (check.ok() ? "" : "; first " + check.first());
  return check.ok() && secs < 300.0;
}

// 9. Forced/forbidden edges against exhaustive search.
bool constrained(std::string& detail) {
  Check check;
  int found = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    const Instance inst = testing::mixed_instance(n, 4000 + seed);
    Sampler rng(seed);
    EdgeConstraints c;
    std::set<int> used;
    const int forced = rng.below(2), forbidden = rng.below(3);
    for (int i = 0; i < forced; ++i) {
      const int id = rng.below(inst.num_edges());
      c.forced.push_back(id);
      used.insert(id);
    }
    for (int i = 0; i < forbidden; ++i) {
      const int id = rng.below(inst.num_edges());
      if (used.insert(id).second) c.forbidden.push_back(id);
    }
    const SolveOutcome out = solve_with_constraints(inst, c);
    audit.record(out, n);
    auto satisfies = [&](const Matching& m) {
      for (int id : c.forced)
        if (m.object_of(inst.edge(id).agent) != inst.edge(id).object) return false;
      for (int id : c.forbidden)
        if (m.object_of(inst.edge(id).agent) == inst.edge(id).object) return false;
      return true;
    };
    const testing::MarginTable table(inst);
    bool exists = false;
    for (const Matching& m : table.popular()) exists |= satisfies(m);
    check.expect(out.found() == exists, seed_tag(seed));
    if (!out.found()) continue;
    ++found;
    check.expect(satisfies(out.assignment), seed_tag(seed) + " violates constraints");
    check.expect(table.margin_of(out.assignment) == 0, seed_tag(seed) + " not popular");
  }
  detail = std::to_string(check.failures()) + " disagreements over 200 (" +
           std::to_string(found) + " found)" +
           (check.ok() ? "" : "; first " + check.first());
  return check.ok();
}

// 10. Elections on the penalty reduction equal penalty-weighted votes.
bool penalty_identity(std::string& detail) {
  Check check;
  int tuples = 0;
  for (std::uint64_t seed = 1; tuples < 100; ++seed) {
    GeneratorOptions opt;
    opt.agents = 2 + static_cast<int>(seed % 3);
    opt.objects = 2 + static_cast<int>((seed / 3) % 3);
    opt.density = 0.6;
    opt.style = testing::style_for(seed);
    opt.seed = 5000 + seed;
    const Instance src = generate_instance(opt);
    const auto all = testing::all_matchings(src);
    Sampler rng(seed);
    const int k = 1 + rng.below(3);
    const Reduction red = reduce_penalty_matching(src, k);
    const Matching& m = all[rng.below(static_cast<int>(all.size()))];
    const Matching& n = all[rng.below(static_cast<int>(all.size()))];
    const int target = testing::direct_delta(red.target, extend_penalty_matching(red, n),
                                             extend_penalty_matching(red, m));
    check.expect(target == testing::direct_delta(src, n, m, k), seed_tag(seed));
    ++tuples;
  }
  detail = std::to_string(check.failures()) + " mismatches over " +
           std::to_string(tuples) + " tuples";
  return check.ok();
}

// 11. Penalty solvers produce penalty-popular outputs of the promised size.
bool penalty_solvers(std::string& detail) {
  Check check;
  int assignments = 0, matchings = 0;
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    const int k = 1 + static_cast<int>(seed % 3);
    const Instance inst = testing::mixed_instance(n, 6000 + seed);
    const SolveOutcome out = solve_penalty_assignment(inst, k);
    audit.record(out, n);
    if (out.found()) {
      ++assignments;
      check.expect(is_popular_with_penalty(inst, out.assignment, k),
                   seed_tag(seed) + " assignment");
      check.expect(testing::direct_penalty_popular(inst, out.assignment, k,
                                                   testing::all_matchings(inst)),
                   seed_tag(seed) + " assignment (direct)");
    }
    GeneratorOptions opt;
    opt.agents = 2 + static_cast<int>(seed % 4);
    opt.objects = 2 + static_cast<int>((seed / 4) % 4);
    opt.density = 0.5;
    opt.style = testing::style_for(seed);
    opt.correlation = seed % 2 ? 0.9 : 0.0;
    opt.seed = 7000 + seed;
    const Instance src = generate_instance(opt);
    const PenaltyMatchingOutcome pm = solve_penalty_matching(src, k);
    if (!pm.found) continue;
    ++matchings;
    const int max_size = maximum_matching(BipartiteGraph::from_instance(src)).size();
    check.expect(is_popular_with_penalty(src, pm.matching, k), seed_tag(seed) + " matching");
    check.expect(pm.matching.size() * (k + 1) >= k * max_size, seed_tag(seed) + " size");
  }
  detail = std::to_string(check.failures()) + " failures; " +
           std::to_string(assignments) + " assignments, " + std::to_string(matchings) +
           " matchings checked" + (check.ok() ? "" : "; first " + check.first());
  return check.ok() && assignments > 0 && matchings > 0;
}

// 12. Housing markets against elections over all allocations.
bool housing(std::string& detail) {
  TempDir dir;
  Check check;
  int found = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const int n = 1 + static_cast<int>(seed % 5);
    const HousingMarket market =
        generate_market(n, 0.4 + 0.1 * static_cast<double>(seed % 7),
                        testing::style_for(seed), seed, seed % 2 ? 1.0 : 0.0);
    const std::string path = dir.write("m.json", market_to_json(market).dump());
    std::ostringstream out, err;
    const int code = cli::cmd_housing({path}, out, err);
    const testing::MarketElection election(market);
    check.expect(code == (election.any_popular() ? cli::kExitFound : cli::kExitNotFound),
                 seed_tag(seed));
    if (code != cli::kExitFound) continue;
    ++found;
    const Json report = Json::parse(out.str());
    std::vector<std::pair<int, int>> arcs;
    std::vector<int> target(n);
    for (int a = 0; a < n; ++a) target[a] = a;
    auto index = [&](const Json& name) {
      return static_cast<int>(std::find(market.agents.begin(), market.agents.end(),
                                        name.get<std::string>()) -
                              market.agents.begin());
    };
    for (const Json& arc : report["allocation"]) {
      arcs.emplace_back(index(arc[0]), index(arc[1]));
      target[arcs.back().first] = arcs.back().second;
    }
    bool cycles = true;
    try {
      require_disjoint_cycles(arcs);
    } catch (const PreconditionError&) {
      cycles = false;
    }
    check.expect(cycles, seed_tag(seed) + " not disjoint cycles");
    check.expect(election.popular(target), seed_tag(seed) + " not popular");
  }
  detail = std::to_string(check.failures()) + " disagreements over 100 markets (" +
           std::to_string(found) + " with popular allocations)" +
           (check.ok() ? "" : "; first " + check.first());
  return check.ok();
}

// 13. Weak-to-strict shifts the minimum margin by q.
bool weak_to_strict_margin(std::string& detail) {
  Check check;
  std::map<int, int> by_margin;
  int enumerated = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const int n = 1 + static_cast<int>(seed % 4);
    const Instance src = testing::random_assignment_instance(
        n, 8000 + seed, PrefStyle::kWeak, 0.6 + 0.1 * static_cast<double>(seed % 5),
        seed % 3 ? 1.0 : 0.0);
    const WeakToStrict w = weak_to_strict(src);
    const Instance& g = w.reduction.target;
    const int weak_min = testing::MarginTable(src).min_margin();
    ++by_margin[weak_min];
    // Minimum over the strict instance: exhaustive when small, otherwise over
    // the mirrors of all assignments of the weak instance.
    int strict_min = INT_MAX;
    if (g.num_agents() <= 9) {
      ++enumerated;
      for_each_perfect_matching(
          g, [&](const Matching& m) {
            strict_min = std::min(strict_min, unpopularity_margin(g, m).margin);
          },
          EnumerationLimits{9, 6});
    } else {
      for (const Matching& m : testing::permutation_assignments(src))
        strict_min = std::min(
            strict_min, unpopularity_margin(g, testing::mirror_assignment(src, w, m)).margin);
    }
    check.expect(strict_min - w.q == weak_min, seed_tag(seed));
    // Budgets k in {0, 1} on the weak side.
    for (int k = 0; k <= 1; ++k)
      check.expect(solve_k_margin(src, k).found() == (strict_min - w.q <= k),
                   seed_tag(seed) + " k " + std::to_string(k));
  }
  std::string margins;
  for (auto [m, count] : by_margin)
    margins += (margins.empty() ? "" : ", ") + std::string("margin ") +
               std::to_string(m) + ": " + std::to_string(count);
  detail = std::to_string(check.failures()) + " mismatches over 50 (" + margins + "; " +
           std::to_string(enumerated) + " strict instances enumerated outright)" +
           (check.ok() ? "" : "; first " + check.first());
  return check.ok() && by_margin.count(0) && by_margin.count(1);
}

// 14. The weak-ranking characterization misfires on a partial order.
bool characterization_divergence(std::string& detail) {
  const Instance inst = testing::partial_order_example();
  const Matching m = testing::by_names(inst, {{"a", "x"}, {"b", "y"}, {"c", "z"}});
  const bool holds =
      characterization_conditions_hold(inst, m, compute_characterization_sets(inst));
  int worst = INT_MIN;
  for (const Matching& n : testing::permutation_assignments(inst))
    worst = std::max(worst, testing::direct_delta(inst, n, m));
  detail = std::string("conditions ") + (holds ? "hold" : "fail") +
           ", brute-force max Delta(N, M) = " + std::to_string(worst);
  return holds && worst == 1;
}

// 15. Iteration bound everywhere and a dense n = 200 run.
bool complexity(std::string& detail) {
  const int n = 200;
  const Instance inst =
      testing::random_assignment_instance(n, 200, PrefStyle::kStrict, 0.9, 0.5);
  const auto start = Clock::now();
  const SolveOutcome out = solve(inst);
  const double secs = seconds_since(start);
  detail = std::to_string(audit.violations) + " of " + std::to_string(audit.runs) +
           " runs above n^2 (worst ratio " + std::to_string(audit.worst_ratio) +
           "); n = 200 " + (out.found() ? "found" : "not found") + " in " +
           std::to_string(out.iterations) + " iterations, " + std::to_string(secs) + " s";
  return audit.violations == 0 && secs < 10.0;
}

struct Criterion {
  const char* name;
  std::function<bool(std::string&)> run;
};

}  // namespace
}  // namespace popassign

int main() {
  using popassign::Criterion;
  const std::vector<Criterion> criteria = {
      {"no popular assignment on unanimous K33", popassign::unanimous_complete},
      {"popular assignment without popular matching",
       popassign::assignment_without_matching},
      {"partial-order example levels", popassign::partial_order_levels},
      {"existence matches brute force", popassign::existence_equivalence},
      {"LP margin matches brute force", popassign::margin_equivalence},
      {"certificates verify", popassign::certificate_soundness},
      {"levels are minimal", popassign::level_minimality},
      {"k-margin matches brute force", popassign::k_margin},
      {"forced/forbidden edges match brute force", popassign::constrained},
      {"penalty reduction vote identity", popassign::penalty_identity},
      {"penalty solvers are penalty-popular", popassign::penalty_solvers},
      {"housing markets match elections", popassign::housing},
      {"weak-to-strict margin shift", popassign::weak_to_strict_margin},
      {"weak-ranking characterization divergence",
       popassign::characterization_divergence},
      // Runs last so the iteration audit covers every earlier run.
      {"iteration bound and n = 200 timing", popassign::complexity},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    failed += !ok;
    std::printf("%s %2zu %s: %s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].name,
                detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
