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

// Variants of the level search: forced and forbidden edges, assignments with
// bounded unpopularity margin, and popularity with a penalty for leaving
// agents unmatched.
//
// Margin search. A load capacity lambda: E -> N with total load at most k
// relaxes G_l edge by edge. Edge (a, b) is lambda-feasible when
//   (i)   l(b) >= top(a) - lambda + 1, or
//   (ii)  l(b) = top(a) - lambda and no level-top(a) neighbor beats b, or
//   (iii) l(b) = top(a) - lambda - 1, b beats every level-top(a) neighbor and
//         no level-(top(a) - 1) neighbor beats b.
// Every load function is tried in order of (total load, sorted edge list);
// edges with positive load are forced into the assignment.

#ifndef POPASSIGN_VARIANTS_HPP_
#define POPASSIGN_VARIANTS_HPP_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "popassign/certificate.hpp"
#include "popassign/instance.hpp"
#include "popassign/matching.hpp"
#include "popassign/popular.hpp"

namespace popassign {

// Edge ids that must (forced) or must not (forbidden) be in the assignment.
struct EdgeConstraints {
  std::vector<int> forced;
  std::vector<int> forbidden;

  // Throws InputError on unknown edges, overlap, or forced edges sharing an
  // endpoint.
  void validate(const Instance& inst) const {
    auto check_id = [&](int id) {
      if (id < 0 || id >= inst.num_edges())
        throw InputError("constraint refers to unknown edge id " +
                         std::to_string(id));
    };
    std::set<int> forbidden_set;
    for (int id : forbidden) {
      check_id(id);
      forbidden_set.insert(id);
    }
    std::set<int> agents, objects;
    for (int id : forced) {
      check_id(id);
      const Edge& e = inst.edge(id);
      if (forbidden_set.count(id))
        throw InputError("edge ('" + inst.agent_name(e.agent) + "', '" +
                         inst.object_name(e.object) +
                         "') is both forced and forbidden");
      if (!agents.insert(e.agent).second || !objects.insert(e.object).second)
        throw InputError("forced edges do not form a matching");
    }
  }
};

// Resolves (agent, object) pairs to edge ids; throws InputError on non-edges.
inline std::vector<int> edge_ids_from_pairs(const Instance& inst,
                                            const std::vector<Edge>& pairs) {
  std::vector<int> ids;
  for (const Edge& e : pairs) {
    std::optional<int> id;
    if (e.agent >= 0 && e.agent < inst.num_agents() && e.object >= 0 &&
        e.object < inst.num_objects())
      id = inst.edge_id(e.agent, e.object);
    if (!id) throw InputError("constraint pair is not an edge of the instance");
    ids.push_back(*id);
  }
  return ids;
}

// Forbidden set equivalent to the constraints: forcing (a, b) forbids every
// other edge at a. Sorted and deduplicated.
inline std::vector<int> forced_to_forbidden(const Instance& inst,
                                            const EdgeConstraints& constraints) {
  std::set<int> out(constraints.forbidden.begin(), constraints.forbidden.end());
  for (int id : constraints.forced) {
    const int a = inst.edge(id).agent;
    for (int sibling : inst.incident_edges(a))
      if (sibling != id) out.insert(sibling);
  }
  return {out.begin(), out.end()};
}

namespace detail {

inline BipartiteGraph induced_minus(const Instance& inst,
                                    const LevelFunction& levels,
                                    const std::vector<char>& removed) {
  BipartiteGraph g(inst.num_agents(), inst.num_objects());
  std::vector<int> positions;
  for (int a = 0; a < inst.num_agents(); ++a) {
    positions.clear();
    induced_positions(inst, levels, a, positions);
    auto ids = inst.incident_edges(a);
    auto nbrs = inst.neighbors(a);
    for (int i : positions)
      if (!removed[ids[i]]) g.add_edge_unchecked(a, nbrs[i]);
  }
  return g;
}

inline std::vector<char> edge_mask(const Instance& inst,
                                   const std::vector<int>& ids) {
  std::vector<char> mask(inst.num_edges(), 0);
  for (int id : ids) mask.at(id) = 1;
  return mask;
}

}  // namespace detail

// Level search on G_l - F, where F is the forbidden set derived from the
// constraints. Levels of top(a) still range over all neighbors. A found
// assignment is popular among all assignments and respects the constraints.
inline SolveOutcome solve_with_constraints(const Instance& inst,
                                           const EdgeConstraints& constraints) {
  constraints.validate(inst);
  detail::require_assignment_instance(inst);
  const std::vector<char> removed =
      detail::edge_mask(inst, forced_to_forbidden(inst, constraints));
  const int n = inst.num_agents();
  SolveOutcome out = detail::run_level_search(
      inst, std::max(1, n), SolveOutcome::Reason::kLevelOverflow,
      [&](const LevelFunction& levels) {
        return detail::induced_minus(inst, levels, removed);
      });
  if (out.found())
    out.certificate = certificate_from_levels(inst, out.assignment, out.levels);
  return out;
}

// Sparse load per edge id.
class LoadCapacity {
 public:
  LoadCapacity() = default;
  // From a multiset of edge ids: each occurrence adds one unit.
  static LoadCapacity from_multiset(const std::vector<int>& edge_ids) {
    LoadCapacity cap;
    for (int id : edge_ids) cap.add(id, 1);
    return cap;
  }

  void add(int edge_id, int units) {
    if (units < 0) throw PreconditionError("load must be non-negative");
    if (units == 0) return;
    loads_[edge_id] += units;
    total_ += units;
  }
  int at(int edge_id) const {
    auto it = loads_.find(edge_id);
    return it == loads_.end() ? 0 : it->second;
  }
  std::int64_t total() const { return total_; }
  // Edges with positive load, by id.
  const std::map<int, int>& entries() const { return loads_; }

  friend bool operator==(const LoadCapacity&, const LoadCapacity&) = default;

 private:
  std::map<int, int> loads_;
  std::int64_t total_ = 0;
};

// Membership of an edge in the lambda-relaxed induced graph.
inline bool lambda_feasible(const Instance& inst, const LevelFunction& levels,
                            int edge_id, int load) {
  if (load < 0) throw PreconditionError("lambda_feasible: negative load");
  const Edge& e = inst.edge(edge_id);
  const int a = e.agent;
  const int i = inst.local_position(edge_id);
  const int top = levels.top_level(inst, a);
  const int l = levels[e.object];
  if (l >= top - load + 1) return true;
  auto nbrs = inst.neighbors(a);
  auto beaten_by_level = [&](int level) {
    for (int j = 0; j < static_cast<int>(nbrs.size()); ++j)
      if (levels[nbrs[j]] == level && inst.prefers_local(a, j, i)) return true;
    return false;
  };
  if (l == top - load) return !beaten_by_level(top);
  if (l == top - load - 1) {
    for (int j = 0; j < static_cast<int>(nbrs.size()); ++j)
      if (levels[nbrs[j]] == top && !inst.prefers_local(a, i, j)) return false;
    return !beaten_by_level(top - 1);
  }
  return false;
}

struct KMarginOptions {
  int threads = 1;  // concurrent load branches; 1 = sequential
};

struct KMarginOutcome {
  SolveOutcome outcome;  // assignment, levels and certificate of the winner
  LoadCapacity load;     // lambda of the winning branch
  // Sum of the certificate; an upper bound on the margin of the assignment,
  // which may be smaller.
  std::int64_t certified_bound = 0;
  // Branches up to and including the winner in enumeration order, or all
  // branches when none succeeds.
  std::int64_t branches = 0;

  bool found() const { return outcome.found(); }
};

// Every multiset of at most k edge ids, by (size, sorted id vector).
inline std::vector<std::vector<int>> enumerate_load_multisets(int num_edges,
                                                              int k) {
  std::vector<std::vector<int>> out{{}};
  if (num_edges == 0) return out;
  for (int j = 1; j <= k; ++j) {
    std::vector<int> cur(j, 0);
    while (true) {
      out.push_back(cur);
      int pos = j - 1;
      while (pos >= 0 && cur[pos] == num_edges - 1) --pos;
      if (pos < 0) break;
      ++cur[pos];
      for (int t = pos + 1; t < j; ++t) cur[t] = cur[pos];
    }
  }
  return out;
}

namespace detail {

inline SolveOutcome run_load_branch(const Instance& inst,
                                    const LoadCapacity& load) {
  SolveOutcome fail;
  fail.status = SolveOutcome::Status::kNotFound;
  fail.reason = SolveOutcome::Reason::kNoFeasibleBranch;
  fail.levels = LevelFunction(inst.num_objects());

  EdgeConstraints constraints;
  for (auto [id, units] : load.entries()) constraints.forced.push_back(id);
  const std::vector<char> removed =
      edge_mask(inst, forced_to_forbidden(inst, constraints));

  // G_{l,lambda} - F is a subgraph of G - F: without a perfect matching in
  // the latter the branch cannot succeed.
  {
    BipartiteGraph g(inst.num_agents(), inst.num_objects());
    for (int id = 0; id < inst.num_edges(); ++id)
      if (!removed[id])
        g.add_edge_unchecked(inst.edge(id).agent, inst.edge(id).object);
    if (maximum_matching(g).size() != inst.num_agents()) return fail;
  }

  const int n = inst.num_agents();
  SolveOutcome out = run_level_search(
      inst, std::max(1, n), SolveOutcome::Reason::kNoFeasibleBranch,
      [&](const LevelFunction& levels) {
        BipartiteGraph g(inst.num_agents(), inst.num_objects());
        for (int id = 0; id < inst.num_edges(); ++id)
          if (!removed[id] && lambda_feasible(inst, levels, id, load.at(id)))
            g.add_edge_unchecked(inst.edge(id).agent, inst.edge(id).object);
        return g;
      });
  if (!out.found()) return out;
  DualCertificate cert(inst.num_agents(), inst.num_objects());
  for (int b = 0; b < inst.num_objects(); ++b) cert.object[b] = -out.levels[b];
  for (int a = 0; a < inst.num_agents(); ++a) {
    const int b = out.assignment.object_of(a);
    cert.agent[a] = out.levels[b] + load.at(*inst.edge_id(a, b));
  }
  out.certificate = std::move(cert);
  return out;
}

}  // namespace detail

// Searches for an assignment with unpopularity margin at most k. The first
// successful branch in enumeration order wins, also when branches run
// concurrently.
inline KMarginOutcome solve_k_margin(const Instance& inst, int k,
                                     const KMarginOptions& options = {}) {
  if (k < 0) throw PreconditionError("solve_k_margin: k must be non-negative");
  detail::require_assignment_instance(inst);
  const auto branches = enumerate_load_multisets(inst.num_edges(), k);
  const int count = static_cast<int>(branches.size());

  std::vector<std::optional<SolveOutcome>> results(count);
  std::atomic<int> next{0};
  std::atomic<int> best{count};
  int total_iterations = 0;
  std::mutex mu;
  auto worker = [&] {
    while (true) {
      const int idx = next.fetch_add(1);
      if (idx >= count || idx > best.load()) return;
      SolveOutcome r = detail::run_load_branch(
          inst, LoadCapacity::from_multiset(branches[idx]));
      std::lock_guard<std::mutex> lock(mu);
      total_iterations += r.iterations;
      if (r.found() && idx < best.load()) best.store(idx);
      results[idx] = std::move(r);
    }
  };
  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  KMarginOutcome out;
  const int winner = best.load();
  if (winner < count) {
    out.outcome = std::move(*results[winner]);
    out.load = LoadCapacity::from_multiset(branches[winner]);
    out.certified_bound = out.outcome.certificate.sum();
    out.branches = winner + 1;
  } else {
    out.outcome.status = SolveOutcome::Status::kNotFound;
    out.outcome.reason = SolveOutcome::Reason::kNoFeasibleBranch;
    out.outcome.levels = LevelFunction(inst.num_objects());
    out.branches = count;
  }
  out.outcome.iterations = total_iterations;
  return out;
}

// Assignment popular with penalty kappa against all matchings, via the
// (kappa + 1)-level truncation on the instance itself.
inline SolveOutcome solve_penalty_assignment(const Instance& inst, int penalty) {
  if (penalty < 1)
    throw PreconditionError("solve_penalty_assignment: penalty must be >= 1");
  return solve_truncated(inst, penalty + 1);
}

}  // namespace popassign

#endif  // POPASSIGN_VARIANTS_HPP_
