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

// Verification layer. Everything here is computed from the definitions
// (votes, head-to-head elections, LP duality) and never from the level
// search, so it can check the solvers.

#ifndef POPASSIGN_ORACLE_HPP_
#define POPASSIGN_ORACLE_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "popassign/certificate.hpp"
#include "popassign/instance.hpp"
#include "popassign/matching.hpp"

namespace popassign {

class EnumerationCapError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

struct EnumerationLimits {
  int max_agents_perfect = 8;  // perfect-matching enumeration
  int max_agents_all = 6;      // enumeration of all matchings
};

struct MarginReport {
  int margin = 0;
  Matching witness;  // attains Delta(witness, M) = margin
  // Optimal LP2 solution when computed through LP1; empty for brute force.
  std::optional<DualCertificate> dual;
};

struct CharacterizationSets {
  std::vector<int> first_choice;   // edge ids of E1
  std::vector<int> second_choice;  // edge ids of E2
  int first_choice_matching_size = 0;
};

struct CertificateCheck {
  bool ok = true;
  std::vector<std::string> violations;
};

// +1 if the agent prefers `object` to M(agent), -1 if it prefers M(agent),
// 0 when indifferent.
inline int edge_weight(const Instance& inst, const Matching& m, int agent,
                       int object) {
  const int current = m.object_of(agent);
  if (current == kUnmatched)
    throw PreconditionError("edge_weight: agent '" + inst.agent_name(agent) +
                            "' is unmatched");
  switch (inst.compare(agent, object, current)) {
    case PrefComparison::kPrefers: return 1;
    case PrefComparison::kDispreferred: return -1;
    case PrefComparison::kIndifferent: return 0;
  }
  return 0;
}

// Vote of one agent in the election N vs M where a matched-vs-unmatched
// transition weighs `penalty`.
inline int vote_with_penalty(const Instance& inst, int agent, const Matching& n,
                             const Matching& m, int penalty) {
  const int bn = n.object_of(agent);
  const int bm = m.object_of(agent);
  if (bn != kUnmatched && bm != kUnmatched) {
    if (bn == bm) return 0;
    switch (inst.compare(agent, bn, bm)) {
      case PrefComparison::kPrefers: return 1;
      case PrefComparison::kDispreferred: return -1;
      case PrefComparison::kIndifferent: return 0;
    }
  }
  if (bn != kUnmatched) return penalty;
  if (bm != kUnmatched) return -penalty;
  return 0;
}

inline int penalty_vote_sum(const Instance& inst, const Matching& n,
                            const Matching& m, int penalty) {
  int total = 0;
  for (int a = 0; a < inst.num_agents(); ++a)
    total += vote_with_penalty(inst, a, n, m, penalty);
  return total;
}

// Delta(N, M): agents preferring N minus agents preferring M. Being unmatched
// is every agent's worst outcome.
inline int delta(const Instance& inst, const Matching& n, const Matching& m) {
  return penalty_vote_sum(inst, n, m, 1);
}

namespace detail {

inline void require_cap(int n, int cap, const char* what) {
  if (n > cap)
    throw EnumerationCapError(std::string(what) + ": instance has " +
                              std::to_string(n) + " agents, cap is " +
                              std::to_string(cap));
}

template <typename Visitor>
bool visit(Visitor& visitor, const Matching& m) {
  if constexpr (std::is_same_v<std::invoke_result_t<Visitor&, const Matching&>,
                               bool>) {
    return visitor(m);
  } else {
    visitor(m);
    return true;
  }
}

}  // namespace detail

// Calls visitor(m) for every perfect matching, agent by agent in neighbor
// order. A visitor returning bool may stop the walk by returning false.
template <typename Visitor>
void for_each_perfect_matching(const Instance& inst, Visitor&& visitor,
                               const EnumerationLimits& limits = {}) {
  const int n = inst.num_agents();
  detail::require_cap(n, limits.max_agents_perfect,
                      "perfect matching enumeration");
  if (n != inst.num_objects()) return;
  Matching m(n, n);
  bool keep_going = true;
  auto rec = [&](auto&& self, int a) -> void {
    if (!keep_going) return;
    if (a == n) {
      keep_going = detail::visit(visitor, m);
      return;
    }
    for (int b : inst.neighbors(a)) {
      if (m.object_matched(b)) continue;
      m.match(a, b);
      self(self, a + 1);
      m.unmatch_agent(a);
      if (!keep_going) return;
    }
  };
  rec(rec, 0);
}

inline std::vector<Matching> enumerate_perfect_matchings(
    const Instance& inst, const EnumerationLimits& limits = {}) {
  std::vector<Matching> out;
  for_each_perfect_matching(inst, [&](const Matching& m) { out.push_back(m); },
                            limits);
  return out;
}

// Every matching (including the empty one). Agent a first stays unmatched,
// then takes each free neighbor in order.
template <typename Visitor>
void for_each_matching(const Instance& inst, Visitor&& visitor,
                       const EnumerationLimits& limits = {}) {
  const int n = inst.num_agents();
  detail::require_cap(n, limits.max_agents_all, "matching enumeration");
  Matching m(n, inst.num_objects());
  bool keep_going = true;
  auto rec = [&](auto&& self, int a) -> void {
    if (!keep_going) return;
    if (a == n) {
      keep_going = detail::visit(visitor, m);
      return;
    }
    self(self, a + 1);
    for (int b : inst.neighbors(a)) {
      if (!keep_going) return;
      if (m.object_matched(b)) continue;
      m.match(a, b);
      self(self, a + 1);
      m.unmatch_agent(a);
    }
  };
  rec(rec, 0);
}

// Unpopularity margin of an assignment through LP1: a maximum-weight perfect
// matching under wt_M. The optimal duals form an LP2 solution.
inline MarginReport unpopularity_margin(const Instance& inst,
                                        const Matching& m) {
  if (!m.is_perfect() || m.num_agents() != inst.num_agents())
    throw PreconditionError("unpopularity_margin: matching is not perfect");
  WeightedBipartiteGraph g(inst.num_agents(), inst.num_objects());
  for (int a = 0; a < inst.num_agents(); ++a)
    for (int b : inst.neighbors(a)) g.add_edge(a, b, edge_weight(inst, m, a, b));
  WeightedMatchingResult res = max_weight_perfect_matching(g);
  MarginReport report;
  report.margin = static_cast<int>(res.total_weight);
  report.witness = std::move(res.matching);
  DualCertificate dual(inst.num_agents(), inst.num_objects());
  for (int a = 0; a < inst.num_agents(); ++a)
    dual.agent[a] = static_cast<int>(res.left_dual[a]);
  for (int b = 0; b < inst.num_objects(); ++b)
    dual.object[b] = static_cast<int>(res.right_dual[b]);
  report.dual = std::move(dual);
  return report;
}

// max Delta(N, M) over all enumerated perfect matchings N, by direct vote
// counting. Ties go to the first N in enumeration order.
inline MarginReport brute_force_margin(const Instance& inst, const Matching& m,
                                       const EnumerationLimits& limits = {}) {
  if (!m.is_perfect() || m.num_agents() != inst.num_agents())
    throw PreconditionError("brute_force_margin: matching is not perfect");
  MarginReport report;
  bool any = false;
  for_each_perfect_matching(
      inst,
      [&](const Matching& n) {
        const int d = delta(inst, n, m);
        if (!any || d > report.margin) {
          report.margin = d;
          report.witness = n;
          any = true;
        }
      },
      limits);
  return report;
}

// Checks an LP2 solution for assignment M: edge feasibility, value ranges
// (popular form when k = 0, margin-k form otherwise), sum bound, and that
// every matched edge carries a non-negative load (zero when k = 0, equal to
// the given loads when provided).
inline CertificateCheck verify_certificate(
    const Instance& inst, const Matching& m, const DualCertificate& alpha,
    int k, const std::vector<int>* matched_loads = nullptr) {
  CertificateCheck check;
  auto fail = [&](std::string msg) {
    check.ok = false;
    check.violations.push_back(std::move(msg));
  };
  const int n = inst.num_agents();
  if (!m.is_perfect() || m.num_agents() != n) {
    fail("matching is not perfect");
    return check;
  }
  if (static_cast<int>(alpha.agent.size()) != n ||
      static_cast<int>(alpha.object.size()) != inst.num_objects()) {
    fail("certificate size does not match the instance");
    return check;
  }
  for (const Edge& e : inst.edges()) {
    const int w = edge_weight(inst, m, e.agent, e.object);
    if (alpha.agent[e.agent] + alpha.object[e.object] < w)
      fail("edge ('" + inst.agent_name(e.agent) + "', '" +
           inst.object_name(e.object) + "') violates alpha_a + alpha_b >= " +
           std::to_string(w));
  }
  const int agent_max = k == 0 ? std::max(0, n - 1) : n;
  for (int a = 0; a < n; ++a)
    if (alpha.agent[a] < 0 || alpha.agent[a] > agent_max)
      fail("alpha of agent '" + inst.agent_name(a) + "' = " +
           std::to_string(alpha.agent[a]) + " outside [0, " +
           std::to_string(agent_max) + "]");
  for (int b = 0; b < inst.num_objects(); ++b)
    if (alpha.object[b] > 0 || alpha.object[b] < -std::max(0, n - 1))
      fail("alpha of object '" + inst.object_name(b) + "' = " +
           std::to_string(alpha.object[b]) + " outside [-" +
           std::to_string(std::max(0, n - 1)) + ", 0]");
  const std::int64_t sum = alpha.sum();
  if (k == 0 ? sum != 0 : sum > k)
    fail("sum of alpha is " + std::to_string(sum) +
         (k == 0 ? ", expected 0" : ", exceeds " + std::to_string(k)));
  for (int a = 0; a < n; ++a) {
    const int load = alpha.agent[a] + alpha.object[m.object_of(a)];
    if (matched_loads) {
      if (load != (*matched_loads)[a])
        fail("load of matched edge at agent '" + inst.agent_name(a) + "' is " +
             std::to_string(load) + ", expected " +
             std::to_string((*matched_loads)[a]));
    } else if (k == 0 ? load != 0 : load < 0) {
      fail("matched edge at agent '" + inst.agent_name(a) +
           "' has load " + std::to_string(load));
    }
  }
  return check;
}

// True iff no matching N has a positive penalty-weighted vote sum against M.
inline bool is_popular_with_penalty(const Instance& inst, const Matching& m,
                                    int penalty,
                                    const EnumerationLimits& limits = {}) {
  bool popular = true;
  for_each_matching(
      inst,
      [&](const Matching& n) {
        if (penalty_vote_sum(inst, n, m, penalty) > 0) popular = false;
        return popular;
      },
      limits);
  return popular;
}

// Sets E1 and E2 without checking that preferences are weak rankings. Only
// meaningful for weak rankings; exposed so the divergence on partial orders
// can be demonstrated.
inline CharacterizationSets compute_characterization_sets(
    const Instance& inst) {
  CharacterizationSets sets;
  std::vector<char> in_first(inst.num_edges(), 0);
  for (int a = 0; a < inst.num_agents(); ++a) {
    auto ids = inst.incident_edges(a);
    const int d = inst.degree(a);
    for (int i = 0; i < d; ++i) {
      bool dominated = false;
      for (int j = 0; j < d && !dominated; ++j)
        dominated = inst.prefers_local(a, j, i);
      if (!dominated) in_first[ids[i]] = 1;
    }
  }
  auto graph_of = [&](int extra) {
    BipartiteGraph g(inst.num_agents(), inst.num_objects());
    for (int id = 0; id < inst.num_edges(); ++id)
      if (in_first[id] || id == extra)
        g.add_edge_unchecked(inst.edge(id).agent, inst.edge(id).object);
    return g;
  };
  sets.first_choice_matching_size = maximum_matching(graph_of(-1)).size();
  std::vector<char> critical(inst.num_edges(), 0);
  for (int id = 0; id < inst.num_edges(); ++id) {
    if (in_first[id]) {
      sets.first_choice.push_back(id);
      continue;
    }
    critical[id] =
        maximum_matching(graph_of(id)).size() > sets.first_choice_matching_size;
  }
  for (int a = 0; a < inst.num_agents(); ++a) {
    auto ids = inst.incident_edges(a);
    const int d = inst.degree(a);
    for (int i = 0; i < d; ++i) {
      if (!critical[ids[i]]) continue;
      bool dominated = false;
      for (int j = 0; j < d && !dominated; ++j)
        dominated = critical[ids[j]] && inst.prefers_local(a, j, i);
      if (!dominated) sets.second_choice.push_back(ids[i]);
    }
  }
  std::sort(sets.second_choice.begin(), sets.second_choice.end());
  return sets;
}

// First- and second-choice edge sets of a weak-ranking instance. The caller
// adds last-resort objects beforehand when the classical convention is
// wanted.
inline CharacterizationSets characterize_weak_rankings(const Instance& inst) {
  if (!inst.has_weak_rankings())
    throw PreconditionError(
        "characterize_weak_rankings: preferences are not weak rankings");
  return compute_characterization_sets(inst);
}

// Conditions of the weak-ranking characterization: M lies in E1 ∪ E2 and
// matches every agent, and M ∩ E1 is a maximum matching of G[E1].
inline bool characterization_conditions_hold(const Instance& inst,
                                             const Matching& m,
                                             const CharacterizationSets& sets) {
  std::vector<char> first(inst.num_edges(), 0), second(inst.num_edges(), 0);
  for (int id : sets.first_choice) first[id] = 1;
  for (int id : sets.second_choice) second[id] = 1;
  int in_first = 0;
  for (int a = 0; a < inst.num_agents(); ++a) {
    const int b = m.object_of(a);
    if (b == kUnmatched) return false;
    auto id = inst.edge_id(a, b);
    if (!id || !(first[*id] || second[*id])) return false;
    in_first += first[*id];
  }
  return in_first == sets.first_choice_matching_size;
}

// Popularity test for weak rankings via the characterization.
inline bool is_popular_weak(const Instance& inst, const Matching& m) {
  return characterization_conditions_hold(inst, m,
                                          characterize_weak_rankings(inst));
}

}  // namespace popassign

#endif  // POPASSIGN_ORACLE_HPP_
