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

// Command implementations behind the popassign tool. Each command writes a
// JSON report to `out`, a short human-readable summary to `err`, and returns
// the process exit code: 0 found, 1 not found, 2 error.

#ifndef POPASSIGN_CLI_HPP_
#define POPASSIGN_CLI_HPP_

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "popassign/augment.hpp"
#include "popassign/generator.hpp"
#include "popassign/instance.hpp"
#include "popassign/io.hpp"
#include "popassign/matching.hpp"
#include "popassign/oracle.hpp"
#include "popassign/popular.hpp"
#include "popassign/reductions.hpp"
#include "popassign/variants.hpp"

namespace popassign::cli {

inline constexpr int kExitFound = 0;
inline constexpr int kExitNotFound = 1;
inline constexpr int kExitError = 2;

struct SolveArgs {
  std::string instance_path;
  std::optional<int> truncate;
  bool verify = false;
  std::vector<std::string> forced;     // "agent,object"
  std::vector<std::string> forbidden;  // "agent,object"
};

struct MatchingArgs {
  std::string instance_path;
  int penalty = 1;
  bool verify = false;
};

struct MarginArgs {
  std::string instance_path;
  std::optional<int> k;
  std::optional<std::string> evaluate_path;
  int parallel_branches = 1;
  bool verify = false;
};

struct HousingArgs {
  std::string market_path;
  bool verify = false;
};

struct GenArgs {
  GeneratorOptions options;
  std::string style = "strict";
  bool market = false;
};

struct VerifyArgs {
  std::string instance_path;
  std::string matching_path;
  std::optional<std::string> certificate_path;
  int k = 0;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class Timer {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline Edge parse_edge_flag(const Instance& inst, const std::string& flag) {
  const auto comma = flag.find(',');
  if (comma == std::string::npos)
    throw InputError("edge '" + flag + "' must be written agent,object");
  const std::string a = flag.substr(0, comma);
  const std::string b = flag.substr(comma + 1);
  auto ia = inst.find_agent(a);
  auto ib = inst.find_object(b);
  if (!ia) throw InputError("unknown agent '" + a + "'");
  if (!ib) throw InputError("unknown object '" + b + "'");
  return {*ia, *ib};
}

inline Json levels_json(const Instance& inst, const LevelFunction& levels) {
  Json out = Json::object();
  for (int b = 0; b < levels.size(); ++b) out[inst.object_name(b)] = levels[b];
  return out;
}

inline Json certificate_json(const Instance& inst, const DualCertificate& cert) {
  Json out;
  out["agents"] = Json::object();
  out["objects"] = Json::object();
  for (int a = 0; a < static_cast<int>(cert.agent.size()); ++a)
    out["agents"][inst.agent_name(a)] = cert.agent[a];
  for (int b = 0; b < static_cast<int>(cert.object.size()); ++b)
    out["objects"][inst.object_name(b)] = cert.object[b];
  return out;
}

inline DualCertificate certificate_from_json(const Instance& inst,
                                             const Json& doc) {
  const Json& j = doc.contains("certificate") ? doc["certificate"] : doc;
  if (!j.is_object() || !j.contains("agents") || !j.contains("objects"))
    throw InputError("certificate needs 'agents' and 'objects' maps");
  DualCertificate cert(inst.num_agents(), inst.num_objects());
  for (const auto& [name, v] : j["agents"].items()) {
    auto a = inst.find_agent(name);
    if (!a || !v.is_number_integer())
      throw InputError("bad certificate entry for agent '" + name + "'");
    cert.agent[*a] = v.get<int>();
  }
  for (const auto& [name, v] : j["objects"].items()) {
    auto b = inst.find_object(name);
    if (!b || !v.is_number_integer())
      throw InputError("bad certificate entry for object '" + name + "'");
    cert.object[*b] = v.get<int>();
  }
  return cert;
}

inline const char* outcome_tag(bool found) { return found ? "found" : "not-found"; }

inline void emit(std::ostream& out, const Json& report) {
  out << report.dump(2) << "\n";
}

inline int fail(std::ostream& out, std::ostream& err, const char* command,
                const std::exception& e) {
  Json report;
  report["command"] = command;
  report["outcome"] = "error";
  report["error"] = e.what();
  emit(out, report);
  err << command << ": error: " << e.what() << "\n";
  return kExitError;
}

// Certificate check plus, when the instance is small enough, a brute-force
// margin check. Returns whether everything that ran passed.
inline bool verify_into(Json& report, const Instance& inst, const Matching& m,
                        const DualCertificate& cert, int k,
                        const std::vector<int>* loads = nullptr) {
  Json v;
  const CertificateCheck check = verify_certificate(inst, m, cert, k, loads);
  v["certificate"] = check.ok ? "passed" : "failed";
  if (!check.ok) v["certificate_violations"] = check.violations;
  bool ok = check.ok;
  if (inst.num_agents() <= EnumerationLimits{}.max_agents_perfect) {
    const int margin = brute_force_margin(inst, m).margin;
    v["brute_force_margin"] = margin;
    v["brute_force"] = margin <= k ? "passed" : "failed";
    ok = ok && margin <= k;
  } else {
    v["brute_force"] = "skipped";
  }
  v["status"] = ok ? "passed" : "failed";
  report["verification"] = std::move(v);
  return ok;
}

}  // namespace detail

// Popular assignment, optionally truncated or with forced/forbidden edges.
// Instances without a perfect matching are augmented first and the result is
// projected back.
inline int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  try {
    detail::Timer timer;
    const Instance inst = parse_instance(detail::read_file(args.instance_path));
    if (args.truncate && (!args.forced.empty() || !args.forbidden.empty()))
      throw InputError("--truncate cannot be combined with edge constraints");
    if (args.truncate && *args.truncate < 1)
      throw InputError("--truncate must be at least 1");
    const Augmentation aug = augment_to_perfect(inst);
    const Instance& g = aug.instance;

    EdgeConstraints constraints;
    for (const auto& f : args.forced)
      constraints.forced.push_back(
          edge_ids_from_pairs(g, {detail::parse_edge_flag(inst, f)})[0]);
    for (const auto& f : args.forbidden)
      constraints.forbidden.push_back(
          edge_ids_from_pairs(g, {detail::parse_edge_flag(inst, f)})[0]);
    constraints.validate(g);
    // Forced edges are handled through the equivalent forbidden set.
    EdgeConstraints lowered{{}, forced_to_forbidden(g, constraints)};

    SolveOutcome result;
    if (args.truncate) result = solve_truncated(g, *args.truncate);
    else if (!lowered.forbidden.empty()) result = solve_with_constraints(g, lowered);
    else result = solve_popular_assignment(g);

    Json report;
    report["command"] = "solve";
    report["outcome"] = detail::outcome_tag(result.found());
    if (!result.found()) report["reason"] = to_string(result.reason);
    report["iterations"] = result.iterations;
    report["augmentation"] = {{"dummy_agents", aug.map.dummy_agents.size()},
                              {"artificial_objects",
                               aug.map.artificial_objects.size()}};
    report["levels"] = detail::levels_json(g, result.levels);
    bool verified = true;
    if (result.found()) {
      report["assignment"] = matching_to_json(inst, aug.map.project(result.assignment));
      report["certificate"] = detail::certificate_json(g, result.certificate);
      if (args.verify)
        verified = detail::verify_into(report, g, result.assignment,
                                       result.certificate, 0);
    }
    report["timing_ms"] = timer.elapsed_ms();
    detail::emit(out, report);
    err << "solve: " << detail::outcome_tag(result.found()) << " after "
        << result.iterations << " iteration(s)";
    if (args.verify && result.found())
      err << ", verification " << (verified ? "passed" : "FAILED");
    err << "\n";
    if (!verified) return kExitError;
    return result.found() ? kExitFound : kExitNotFound;
  } catch (const std::exception& e) {
    return detail::fail(out, err, "solve", e);
  }
}

// Popular matching (penalty 1) or matching popular with penalty kappa, by
// reduction to a truncated assignment search.
inline int cmd_matching(const MatchingArgs& args, std::ostream& out,
                        std::ostream& err) {
  try {
    detail::Timer timer;
    if (args.penalty < 1) throw InputError("--penalty must be at least 1");
    const Instance inst = parse_instance(detail::read_file(args.instance_path));
    const PenaltyMatchingOutcome result = args.penalty == 1
                                              ? solve_popular_matching(inst)
                                              : solve_penalty_matching(inst, args.penalty);
    Json report;
    report["command"] = "matching";
    report["penalty"] = args.penalty;
    report["outcome"] = detail::outcome_tag(result.found);
    if (!result.found) report["reason"] = to_string(result.target_outcome.reason);
    report["iterations"] = result.target_outcome.iterations;
    bool verified = true;
    if (result.found) {
      report["matching"] = matching_to_json(inst, result.matching);
      report["size"] = result.matching.size();
      if (args.verify) {
        Json v;
        if (inst.num_agents() <= EnumerationLimits{}.max_agents_all) {
          verified = is_popular_with_penalty(inst, result.matching, args.penalty);
          v["brute_force"] = verified ? "passed" : "failed";
        } else {
          v["brute_force"] = "skipped";
        }
        v["status"] = verified ? "passed" : "failed";
        report["verification"] = std::move(v);
      }
    }
    report["timing_ms"] = timer.elapsed_ms();
    detail::emit(out, report);
    err << "matching: " << detail::outcome_tag(result.found) << " (penalty "
        << args.penalty << ")\n";
    if (!verified) return kExitError;
    return result.found ? kExitFound : kExitNotFound;
  } catch (const std::exception& e) {
    return detail::fail(out, err, "matching", e);
  }
}

// --k: search for an assignment with margin at most k. --evaluate: exact
// margin of a given assignment with a witness.
inline int cmd_margin(const MarginArgs& args, std::ostream& out,
                      std::ostream& err) {
  try {
    detail::Timer timer;
    if (args.k.has_value() == args.evaluate_path.has_value())
      throw InputError("give exactly one of --k or --evaluate");
    const Instance inst = parse_instance(detail::read_file(args.instance_path));
    Json report;
    report["command"] = "margin";
    if (args.evaluate_path) {
      Json doc = popassign::detail::parse_json(detail::read_file(*args.evaluate_path));
      if (doc.is_object() && doc.contains("assignment")) doc = doc["assignment"];
      const Matching m = matching_from_pairs(inst, pairs_from_json(inst, doc));
      if (!m.is_perfect())
        throw InputError("matching is not an assignment of the instance");
      const MarginReport margin = unpopularity_margin(inst, m);
      report["outcome"] = "evaluated";
      report["margin"] = margin.margin;
      report["witness"] = matching_to_json(inst, margin.witness);
      report["timing_ms"] = timer.elapsed_ms();
      detail::emit(out, report);
      err << "margin: " << margin.margin << "\n";
      return kExitFound;
    }
    if (*args.k < 0) throw InputError("--k must be non-negative");
    if (args.parallel_branches < 1)
      throw InputError("--parallel-branches must be at least 1");
    const Augmentation aug = augment_to_perfect(inst);
    const Instance& g = aug.instance;
    const KMarginOutcome result =
        solve_k_margin(g, *args.k, KMarginOptions{args.parallel_branches});
    report["k"] = *args.k;
    report["outcome"] = detail::outcome_tag(result.found());
    if (!result.found()) report["reason"] = to_string(result.outcome.reason);
    report["branches"] = result.branches;
    report["iterations"] = result.outcome.iterations;
    bool verified = true;
    if (result.found()) {
      report["assignment"] =
          matching_to_json(inst, aug.map.project(result.outcome.assignment));
      report["levels"] = detail::levels_json(g, result.outcome.levels);
      report["certificate"] = detail::certificate_json(g, result.outcome.certificate);
      report["certified_margin_bound"] = result.certified_bound;
      Json load = Json::array();
      for (auto [id, units] : result.load.entries())
        load.push_back({{"agent", g.agent_name(g.edge(id).agent)},
                        {"object", g.object_name(g.edge(id).object)},
                        {"load", units}});
      report["load"] = std::move(load);
      if (args.verify)
        verified = detail::verify_into(report, g, result.outcome.assignment,
                                       result.outcome.certificate, *args.k);
    }
    report["timing_ms"] = timer.elapsed_ms();
    detail::emit(out, report);
    err << "margin: " << detail::outcome_tag(result.found()) << " at k = "
        << *args.k << " after " << result.branches << " branch(es)\n";
    if (!verified) return kExitError;
    return result.found() ? kExitFound : kExitNotFound;
  } catch (const std::exception& e) {
    return detail::fail(out, err, "margin", e);
  }
}

// Popular allocation of a housing market, reported as trading cycles.
inline int cmd_housing(const HousingArgs& args, std::ostream& out,
                       std::ostream& err) {
  try {
    detail::Timer timer;
    const HousingMarket market = parse_market(detail::read_file(args.market_path));
    const Reduction red = housing_to_assignment(market);
    const SolveOutcome result = solve_popular_assignment(red.target);
    Json report;
    report["command"] = "housing";
    report["outcome"] = detail::outcome_tag(result.found());
    report["iterations"] = result.iterations;
    bool verified = true;
    if (result.found()) {
      const Allocation alloc = assignment_to_allocation(red, result.assignment);
      Json cycles = Json::array();
      for (const auto& cycle : alloc.cycles()) {
        Json c = Json::array();
        for (int a : cycle) c.push_back(market.agents[a]);
        cycles.push_back(std::move(c));
      }
      report["cycles"] = std::move(cycles);
      Json arcs = Json::array();
      for (auto [from, to] : alloc.arcs)
        arcs.push_back({market.agents[from], market.agents[to]});
      report["allocation"] = std::move(arcs);
      if (args.verify)
        verified = detail::verify_into(report, red.target, result.assignment,
                                       result.certificate, 0);
    } else {
      report["reason"] = to_string(result.reason);
    }
    report["timing_ms"] = timer.elapsed_ms();
    detail::emit(out, report);
    err << "housing: " << detail::outcome_tag(result.found()) << "\n";
    if (!verified) return kExitError;
    return result.found() ? kExitFound : kExitNotFound;
  } catch (const std::exception& e) {
    return detail::fail(out, err, "housing", e);
  }
}

// Seeded random instance (or market) as JSON on `out`.
inline int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err) {
  try {
    GeneratorOptions opt = args.options;
    opt.style = parse_pref_style(args.style);
    if (args.market) {
      const HousingMarket market =
          generate_market(opt.agents, opt.density, opt.style, opt.seed,
                          opt.correlation);
      out << market_to_json(market).dump(2) << "\n";
    } else {
      out << serialize_instance(generate_instance(opt));
    }
    return kExitFound;
  } catch (const std::exception& e) {
    err << "gen: error: " << e.what() << "\n";
    return kExitError;
  }
}

// Checks a claimed assignment: exact margin, and the certificate when given.
// Exit 0 when the margin is at most k and any certificate passes.
inline int cmd_verify(const VerifyArgs& args, std::ostream& out,
                      std::ostream& err) {
  try {
    if (args.k < 0) throw InputError("--k must be non-negative");
    const Instance inst = parse_instance(detail::read_file(args.instance_path));
    Json doc = popassign::detail::parse_json(detail::read_file(args.matching_path));
    if (doc.is_object() && doc.contains("assignment")) doc = doc["assignment"];
    const Matching m = matching_from_pairs(inst, pairs_from_json(inst, doc));
    if (!m.is_perfect())
      throw InputError("matching is not an assignment of the instance");
    Json report;
    report["command"] = "verify";
    report["k"] = args.k;
    const MarginReport margin = unpopularity_margin(inst, m);
    report["margin"] = margin.margin;
    report["witness"] = matching_to_json(inst, margin.witness);
    bool ok = margin.margin <= args.k;
    if (args.certificate_path) {
      const DualCertificate cert = detail::certificate_from_json(
          inst, popassign::detail::parse_json(detail::read_file(*args.certificate_path)));
      const CertificateCheck check = verify_certificate(inst, m, cert, args.k);
      report["certificate"] = check.ok ? "passed" : "failed";
      if (!check.ok) report["certificate_violations"] = check.violations;
      ok = ok && check.ok;
    }
    report["outcome"] = ok ? "passed" : "failed";
    detail::emit(out, report);
    err << "verify: margin " << margin.margin << ", "
        << (ok ? "passed" : "failed") << "\n";
    return ok ? kExitFound : kExitNotFound;
  } catch (const std::exception& e) {
    return detail::fail(out, err, "verify", e);
  }
}

}  // namespace popassign::cli

#endif  // POPASSIGN_CLI_HPP_
