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

// Level-function search for popular assignments.
//
// Every object b carries a level l(b) >= 0. For an agent a let top(a) be the
// highest level among its neighbors. The induced subgraph G_l keeps edge
// (a, b) iff
//   (i)  l(b) = top(a) and no level-top(a) neighbor is preferred to b, or
//   (ii) l(b) = top(a) - 1, b is preferred to every level-top(a) neighbor,
//        and no level-(top(a) - 1) neighbor is preferred to b.
// A perfect matching of G_l is a popular assignment, certified by
// alpha_b = -l(b), alpha_a = l(M(a)). The search starts from all-zero levels
// and raises the level of every object left unmatched by a maximum matching
// of G_l; reaching level n proves that no popular assignment exists.

#ifndef POPASSIGN_POPULAR_HPP_
#define POPASSIGN_POPULAR_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "popassign/certificate.hpp"
#include "popassign/instance.hpp"
#include "popassign/matching.hpp"

namespace popassign {

class NoPerfectMatchingError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class LevelFunction {
 public:
  LevelFunction() = default;
  explicit LevelFunction(int num_objects) : levels_(num_objects, 0) {}
  explicit LevelFunction(std::vector<int> levels) : levels_(std::move(levels)) {
    for (int l : levels_)
      if (l < 0) throw PreconditionError("levels must be non-negative");
  }

  int size() const { return static_cast<int>(levels_.size()); }
  int operator[](int object) const { return levels_[object]; }
  void raise(int object) { ++levels_.at(object); }
  std::span<const int> values() const { return levels_; }

  int max_level() const {
    return levels_.empty() ? 0
                           : *std::max_element(levels_.begin(), levels_.end());
  }
  std::int64_t total() const {
    return std::accumulate(levels_.begin(), levels_.end(), std::int64_t{0});
  }

  // Highest level among the agent's neighbors.
  int top_level(const Instance& inst, int agent) const {
    auto nbrs = inst.neighbors(agent);
    if (nbrs.empty())
      throw PreconditionError("agent '" + inst.agent_name(agent) +
                              "' has no neighbors");
    int top = 0;
    for (int b : nbrs) top = std::max(top, levels_[b]);
    return top;
  }
  std::vector<int> top_levels(const Instance& inst) const {
    std::vector<int> out(inst.num_agents());
    for (int a = 0; a < inst.num_agents(); ++a) out[a] = top_level(inst, a);
    return out;
  }

  friend bool operator==(const LevelFunction&, const LevelFunction&) = default;

 private:
  std::vector<int> levels_;
};

struct SolveOutcome {
  enum class Status { kFound, kNotFound };
  enum class Reason { kNone, kLevelOverflow, kTruncationCap, kNoFeasibleBranch };

  Status status = Status::kNotFound;
  Reason reason = Reason::kNone;
  Matching assignment;             // set when found
  LevelFunction levels;            // final levels, always set
  DualCertificate certificate;     // set when found
  int iterations = 0;              // number of maximum-matching rounds

  bool found() const { return status == Status::kFound; }
};

inline const char* to_string(SolveOutcome::Reason reason) {
  switch (reason) {
    case SolveOutcome::Reason::kNone: return "none";
    case SolveOutcome::Reason::kLevelOverflow: return "level-overflow";
    case SolveOutcome::Reason::kTruncationCap: return "truncation-cap";
    case SolveOutcome::Reason::kNoFeasibleBranch: return "no-feasible-branch";
  }
  return "unknown";
}

namespace detail {

// Appends the local positions of the agent's G_l edges to out.
inline void induced_positions(const Instance& inst, const LevelFunction& levels,
                              int agent, std::vector<int>& out) {
  auto nbrs = inst.neighbors(agent);
  const int top = levels.top_level(inst, agent);
  std::vector<int> top_set, below_set;
  for (int i = 0; i < static_cast<int>(nbrs.size()); ++i) {
    const int l = levels[nbrs[i]];
    if (l == top) top_set.push_back(i);
    else if (l == top - 1) below_set.push_back(i);
  }
  auto dominated_within = [&](int i, const std::vector<int>& set) {
    return std::any_of(set.begin(), set.end(), [&](int j) {
      return inst.prefers_local(agent, j, i);
    });
  };
  // Output in local order for determinism.
  std::vector<int> chosen;
  for (int i : top_set)
    if (!dominated_within(i, top_set)) chosen.push_back(i);
  for (int i : below_set) {
    const bool beats_top = std::all_of(
        top_set.begin(), top_set.end(),
        [&](int j) { return inst.prefers_local(agent, i, j); });
    if (beats_top && !dominated_within(i, below_set)) chosen.push_back(i);
  }
  std::sort(chosen.begin(), chosen.end());
  out.insert(out.end(), chosen.begin(), chosen.end());
}

inline void require_assignment_instance(const Instance& inst) {
  if (inst.num_agents() != inst.num_objects())
    throw NoPerfectMatchingError("instance has " +
                                 std::to_string(inst.num_agents()) +
                                 " agents but " +
                                 std::to_string(inst.num_objects()) +
                                 " objects; augment it first");
  if (maximum_matching(BipartiteGraph::from_instance(inst)).size() !=
      inst.num_agents())
    throw NoPerfectMatchingError(
        "instance admits no perfect matching; augment it first");
}

// Core loop shared by every level-based solver. build_graph returns the
// subgraph searched for a perfect matching under the current levels. The
// loop stops with kFound as soon as that matching is perfect, or with
// NotFound once some level reaches cap.
inline SolveOutcome run_level_search(
    const Instance& inst, int cap, SolveOutcome::Reason cap_reason,
    const std::function<BipartiteGraph(const LevelFunction&)>& build_graph) {
  SolveOutcome out;
  out.levels = LevelFunction(inst.num_objects());
  const int n = inst.num_agents();
  while (true) {
    if (out.levels.max_level() >= cap && n > 0) {
      out.status = SolveOutcome::Status::kNotFound;
      out.reason = cap_reason;
      return out;
    }
    ++out.iterations;
    Matching m = maximum_matching(build_graph(out.levels));
    if (m.size() == n) {
      out.status = SolveOutcome::Status::kFound;
      out.assignment = std::move(m);
      return out;
    }
    for (int b = 0; b < inst.num_objects(); ++b)
      if (!m.object_matched(b)) out.levels.raise(b);
  }
}

}  // namespace detail

// G_l as a bipartite graph over (agents, objects).
inline BipartiteGraph induced_subgraph(const Instance& inst,
                                       const LevelFunction& levels) {
  BipartiteGraph g(inst.num_agents(), inst.num_objects());
  std::vector<int> positions;
  for (int a = 0; a < inst.num_agents(); ++a) {
    positions.clear();
    detail::induced_positions(inst, levels, a, positions);
    auto nbrs = inst.neighbors(a);
    for (int i : positions) g.add_edge_unchecked(a, nbrs[i]);
  }
  return g;
}

// Edge ids of G_l.
inline std::vector<int> induced_edge_ids(const Instance& inst,
                                         const LevelFunction& levels) {
  std::vector<int> ids;
  std::vector<int> positions;
  for (int a = 0; a < inst.num_agents(); ++a) {
    positions.clear();
    detail::induced_positions(inst, levels, a, positions);
    auto edges = inst.incident_edges(a);
    for (int i : positions) ids.push_back(edges[i]);
  }
  return ids;
}

// alpha_b = -l(b), alpha_a = l(M(a)). M must be perfect and inside G_l.
inline DualCertificate certificate_from_levels(const Instance& inst,
                                               const Matching& m,
                                               const LevelFunction& levels) {
  if (!m.is_perfect() || m.num_agents() != inst.num_agents())
    throw PreconditionError("certificate_from_levels: matching is not perfect");
  if (levels.size() != inst.num_objects())
    throw PreconditionError("certificate_from_levels: level size mismatch");
  const BipartiteGraph g = induced_subgraph(inst, levels);
  DualCertificate cert(inst.num_agents(), inst.num_objects());
  for (int a = 0; a < inst.num_agents(); ++a) {
    const int b = m.object_of(a);
    if (!g.has_edge(a, b))
      throw PreconditionError("certificate_from_levels: matched edge ('" +
                              inst.agent_name(a) + "', '" +
                              inst.object_name(b) + "') is not in G_l");
    cert.agent[a] = levels[b];
  }
  for (int b = 0; b < inst.num_objects(); ++b) cert.object[b] = -levels[b];
  return cert;
}

// Level search that rejects as soon as some object reaches max_level. With
// max_level >= n this is the untruncated search.
inline SolveOutcome solve_truncated(const Instance& inst, int max_level) {
  if (max_level < 1)
    throw PreconditionError("solve_truncated: max_level must be positive");
  detail::require_assignment_instance(inst);
  const int n = inst.num_agents();
  const bool truncated = max_level < n;
  SolveOutcome out = detail::run_level_search(
      inst, truncated ? max_level : n,
      truncated ? SolveOutcome::Reason::kTruncationCap
                : SolveOutcome::Reason::kLevelOverflow,
      [&](const LevelFunction& levels) {
        return induced_subgraph(inst, levels);
      });
  if (out.found())
    out.certificate = certificate_from_levels(inst, out.assignment, out.levels);
  return out;
}

// Finds a popular assignment or proves none exists. The instance must admit
// a perfect matching (see augment_to_perfect).
inline SolveOutcome solve_popular_assignment(const Instance& inst) {
  return solve_truncated(inst, std::max(1, inst.num_agents()));
}

}  // namespace popassign

#endif  // POPASSIGN_POPULAR_HPP_
