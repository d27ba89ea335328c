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

// Instance transformations onto the popular assignment problem, with the
// maps needed to move solutions back and forth.
//
// Added nodes are named by role:
//   __lr:<agent>            last-resort object of an agent
//   __dummy:<i>             dummy agent
//   __p:<agent>:<i>         path agent of the penalty gadget
//   __l:<agent>:<i>         path object of the penalty gadget
//   __art:<color>:<i>       artificial object of a color class
//   __tier:<agent>:<i>      tier agent of the weak-to-strict transform
//   __tierobj:<agent>:<i>   tier object of the weak-to-strict transform
//   __twin:<agent>:<i>:<j>  copies of a tier agent (strict gadget)
//   __top:<agent>:<i>:<j>   top objects of the strict gadget
//   __house:<agent>         endowment of an agent in a housing market

#ifndef POPASSIGN_REDUCTIONS_HPP_
#define POPASSIGN_REDUCTIONS_HPP_

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "popassign/augment.hpp"
#include "popassign/instance.hpp"
#include "popassign/matching.hpp"
#include "popassign/popular.hpp"

namespace popassign {

enum class NodeRole {
  kOriginal,
  kLastResort,
  kDummy,
  kPathAgent,
  kPathObject,
  kArtificial,
  kTierAgent,
  kTierObject,
  kGadgetAgent,
  kGadgetObject,
  kHouse,
};

enum class ReductionKind {
  kLastResorts,
  kPopularMatching,
  kDiversity,
  kPenaltyMatching,
  kHousing,
  kWeakToStrict,
};

// Where a target node comes from: `source` is the source agent (or color)
// it belongs to, `index` its position within that group.
struct NodeOrigin {
  NodeRole role = NodeRole::kOriginal;
  int source = -1;
  int index = 0;
};

struct ReductionMap {
  ReductionKind kind = ReductionKind::kPopularMatching;
  int source_agents = 0;
  int source_objects = 0;
  std::vector<NodeOrigin> agent_origin;   // per target agent
  std::vector<NodeOrigin> object_origin;  // per target object
  std::vector<int> agent_forward;         // source agent -> target agent
  std::vector<int> object_forward;        // source object -> target object
  // Per source agent: penalty path agents p_1..p_{k-1}, path objects
  // l_1..l_k (a single last resort for the popular matching reduction).
  std::vector<std::vector<int>> path_agents;
  std::vector<std::vector<int>> path_objects;
  // weak_to_strict: per source agent, tier agents and tier objects by tier,
  // and per tier agent its two strict-gadget copies.
  std::vector<std::vector<int>> tier_agents;
  std::vector<std::vector<int>> tier_objects;
  std::map<int, std::array<int, 2>> twins;

  bool original_agent(int target_agent) const {
    return agent_origin[target_agent].role == NodeRole::kOriginal;
  }
  bool original_object(int target_object) const {
    return object_origin[target_object].role == NodeRole::kOriginal;
  }

  // Source matching corresponding to a target matching. Pairs that do not
  // join an original agent to an original object are dropped; for
  // weak_to_strict the tier gadgets are unwound.
  Matching lift(const Matching& target) const;
};

struct Reduction {
  Instance target;
  ReductionMap map;
};

namespace detail {

inline ReductionMap identity_prefix(const Instance& src, ReductionKind kind) {
  ReductionMap map;
  map.kind = kind;
  map.source_agents = src.num_agents();
  map.source_objects = src.num_objects();
  for (int a = 0; a < src.num_agents(); ++a) {
    map.agent_origin.push_back({NodeRole::kOriginal, a, 0});
    map.agent_forward.push_back(a);
  }
  for (int b = 0; b < src.num_objects(); ++b) {
    map.object_origin.push_back({NodeRole::kOriginal, b, 0});
    map.object_forward.push_back(b);
  }
  return map;
}

// Matches every still-free target agent to a free object, giving the
// agents already matched in `partial` no say. Throws if impossible.
inline Matching complete_assignment(const Instance& target, Matching partial) {
  BipartiteGraph g(target.num_agents(), target.num_objects());
  for (int a = 0; a < target.num_agents(); ++a) {
    if (partial.agent_matched(a)) continue;
    for (int b : target.neighbors(a))
      if (!partial.object_matched(b)) g.add_edge_unchecked(a, b);
  }
  Matching rest = maximum_matching(g);
  for (const Edge& e : rest.pairs()) partial.match(e.agent, e.object);
  if (!partial.is_perfect())
    throw PreconditionError("matching does not extend to an assignment");
  return partial;
}

}  // namespace detail

inline Matching ReductionMap::lift(const Matching& target) const {
  if (kind == ReductionKind::kHousing)
    throw PreconditionError(
        "lift: use assignment_to_allocation for housing markets");
  Matching out(source_agents, source_objects);
  if (kind != ReductionKind::kWeakToStrict) {
    for (const Edge& e : target.pairs())
      if (original_agent(e.agent) && original_object(e.object))
        out.match(agent_origin[e.agent].source,
                  object_origin[e.object].source);
    return out;
  }
  // Unwind the strict gadget, then the tier split.
  auto held_by_group = [&](int tier_agent) {
    std::vector<int> members{tier_agent};
    auto it = twins.find(tier_agent);
    if (it != twins.end())
      members.insert(members.end(), it->second.begin(), it->second.end());
    for (int member : members) {
      const int b = target.object_of(member);
      if (b != kUnmatched && object_origin[b].role != NodeRole::kGadgetObject)
        return b;
    }
    return static_cast<int>(kUnmatched);
  };
  for (int v = 0; v < source_agents; ++v) {
    const int held = target.object_of(agent_forward[v]);
    if (held == kUnmatched) continue;
    const NodeOrigin& origin = object_origin[held];
    if (origin.role != NodeRole::kTierObject) continue;
    const int obj = held_by_group(tier_agents[v][origin.index]);
    if (obj != kUnmatched && original_object(obj))
      out.match(v, object_origin[obj].source);
  }
  return out;
}

// Adds a last-resort object l(a) for each agent, ranked strictly below all of
// a's neighbors. No dummies: the classical convention for weak-ranking
// characterizations.
inline Reduction with_last_resorts(const Instance& src) {
  detail::NameRegistry names(src);
  InstanceDraft draft;
  detail::copy_into(src, draft);
  Reduction red;
  red.map = detail::identity_prefix(src, ReductionKind::kLastResorts);
  red.map.path_objects.resize(src.num_agents());
  for (int a = 0; a < src.num_agents(); ++a) {
    const int l = draft.add_object(names.claim("__lr:" + src.agent_name(a)));
    red.map.object_origin.push_back({NodeRole::kLastResort, a, 0});
    red.map.path_objects[a].push_back(l);
    draft.add_edge(a, l);
    for (int b : src.neighbors(a)) draft.prefer(a, b, l);
  }
  red.target = draft.build();
  return red;
}

// Popular matching -> popular assignment: last resorts plus |B| dummy agents
// adjacent and indifferent to every object of the target.
inline Reduction reduce_popular_matching(const Instance& src) {
  Reduction red = with_last_resorts(src);
  red.map.kind = ReductionKind::kPopularMatching;
  detail::NameRegistry names(red.target);
  InstanceDraft draft;
  detail::copy_into(red.target, draft);
  for (int i = 0; i < src.num_objects(); ++i) {
    const int d = draft.add_agent(names.claim("__dummy:" + std::to_string(i)));
    red.map.agent_origin.push_back({NodeRole::kDummy, -1, i});
    for (int b = 0; b < red.target.num_objects(); ++b) draft.add_edge(d, b);
  }
  red.target = draft.build();
  return red;
}

// Assignment of the popular-matching target corresponding to a matching of
// the source.
inline Matching extend_popular_matching(const Reduction& red,
                                        const Matching& source) {
  Matching m(red.target.num_agents(), red.target.num_objects());
  for (int a = 0; a < red.map.source_agents; ++a) {
    const int b = source.object_of(a);
    m.match(a, b == kUnmatched ? red.map.path_objects[a][0] : b);
  }
  return detail::complete_assignment(red.target, std::move(m));
}

struct ColorBounds {
  int lower = 0;
  int upper = 0;
};

// Diversity quotas: color class i must have between lower and upper matched
// agents. Adds n_i - lower artificial worst-choice objects per color and
// |B| - sum(lower) dummies, each adjacent to all of B and to the first
// upper - lower artificial objects of every color.
inline Reduction reduce_diversity(const Instance& src,
                                  const std::vector<int>& color,
                                  const std::vector<ColorBounds>& bounds) {
  if (static_cast<int>(color.size()) != src.num_agents())
    throw InputError("reduce_diversity: one color per agent required");
  const int k = static_cast<int>(bounds.size());
  std::vector<int> count(k, 0);
  for (int c : color) {
    if (c < 0 || c >= k) throw InputError("reduce_diversity: color out of range");
    ++count[c];
  }
  int lower_sum = 0;
  for (int i = 0; i < k; ++i) {
    const auto [s, t] = bounds[i];
    if (s < 0 || s > t || t > count[i])
      throw InputError("reduce_diversity: bounds of color " +
                       std::to_string(i) + " violate 0 <= s <= t <= n_i");
    lower_sum += s;
  }
  if (lower_sum > src.num_objects())
    throw InputError("reduce_diversity: lower bounds exceed the object count");

  detail::NameRegistry names(src);
  InstanceDraft draft;
  detail::copy_into(src, draft);
  Reduction red;
  red.map = detail::identity_prefix(src, ReductionKind::kDiversity);
  std::vector<std::vector<int>> artificial(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < count[i] - bounds[i].lower; ++j) {
      const int x = draft.add_object(names.claim(
          "__art:" + std::to_string(i) + ":" + std::to_string(j)));
      red.map.object_origin.push_back({NodeRole::kArtificial, i, j});
      artificial[i].push_back(x);
    }
  }
  for (int a = 0; a < src.num_agents(); ++a) {
    for (int x : artificial[color[a]]) {
      draft.add_edge(a, x);
      for (int b : src.neighbors(a)) draft.prefer(a, b, x);
    }
  }
  const int dummies = src.num_objects() - lower_sum;
  for (int i = 0; i < dummies; ++i) {
    const int d = draft.add_agent(names.claim("__dummy:" + std::to_string(i)));
    red.map.agent_origin.push_back({NodeRole::kDummy, -1, i});
    for (int b = 0; b < src.num_objects(); ++b) draft.add_edge(d, b);
    for (int c = 0; c < k; ++c)
      for (int j = 0; j < bounds[c].upper - bounds[c].lower; ++j)
        draft.add_edge(d, artificial[c][j]);
  }
  red.target = draft.build();
  return red;
}

// Penalty-k matching -> popular assignment. Each agent a gets a path
// a - l_1(a) - p_1(a) - l_2(a) - ... - p_{k-1}(a) - l_k(a), with l_1(a) its
// unique worst choice and p_i(a) preferring l_i(a) to l_{i+1}(a); |B| dummy
// agents are adjacent and indifferent to B and every l_k(a).
inline Reduction reduce_penalty_matching(const Instance& src, int penalty) {
  if (penalty < 1) throw PreconditionError("penalty must be at least 1");
  detail::NameRegistry names(src);
  InstanceDraft draft;
  detail::copy_into(src, draft);
  Reduction red;
  red.map = detail::identity_prefix(src, ReductionKind::kPenaltyMatching);
  red.map.path_agents.resize(src.num_agents());
  red.map.path_objects.resize(src.num_agents());
  for (int a = 0; a < src.num_agents(); ++a) {
    const std::string& name = src.agent_name(a);
    for (int i = 1; i <= penalty; ++i) {
      red.map.path_objects[a].push_back(draft.add_object(
          names.claim("__l:" + name + ":" + std::to_string(i))));
      red.map.object_origin.push_back({NodeRole::kPathObject, a, i});
    }
    for (int i = 1; i < penalty; ++i) {
      red.map.path_agents[a].push_back(draft.add_agent(
          names.claim("__p:" + name + ":" + std::to_string(i))));
      red.map.agent_origin.push_back({NodeRole::kPathAgent, a, i});
    }
    const auto& ls = red.map.path_objects[a];
    const auto& ps = red.map.path_agents[a];
    draft.add_edge(a, ls[0]);
    for (int b : src.neighbors(a)) draft.prefer(a, b, ls[0]);
    for (int i = 0; i + 1 < penalty; ++i) {
      draft.add_edge(ps[i], ls[i]);
      draft.add_edge(ps[i], ls[i + 1]);
      draft.prefer(ps[i], ls[i], ls[i + 1]);
    }
  }
  for (int i = 0; i < src.num_objects(); ++i) {
    const int d = draft.add_agent(names.claim("__dummy:" + std::to_string(i)));
    red.map.agent_origin.push_back({NodeRole::kDummy, -1, i});
    for (int b = 0; b < src.num_objects(); ++b) draft.add_edge(d, b);
    for (int a = 0; a < src.num_agents(); ++a)
      draft.add_edge(d, red.map.path_objects[a].back());
  }
  red.target = draft.build();
  return red;
}

// The corresponding assignment of a source matching under the penalty
// reduction; dummies absorb the remaining objects in index order.
inline Matching extend_penalty_matching(const Reduction& red,
                                        const Matching& source) {
  Matching m(red.target.num_agents(), red.target.num_objects());
  for (int a = 0; a < red.map.source_agents; ++a) {
    const auto& ls = red.map.path_objects[a];
    const auto& ps = red.map.path_agents[a];
    const int b = source.object_of(a);
    if (b != kUnmatched) {
      m.match(a, b);
      for (std::size_t i = 0; i < ps.size(); ++i) m.match(ps[i], ls[i]);
    } else {
      m.match(a, ls[0]);
      for (std::size_t i = 0; i < ps.size(); ++i) m.match(ps[i], ls[i + 1]);
    }
  }
  return detail::complete_assignment(red.target, std::move(m));
}

struct PenaltyMatchingOutcome {
  bool found = false;
  Matching matching;           // source matching when found
  SolveOutcome target_outcome;  // raw outcome on the reduced instance
};

// Matching popular with penalty k: reduce, run the (k+1)-level truncation on
// the target, lift back.
inline PenaltyMatchingOutcome solve_penalty_matching(const Instance& src,
                                                     int penalty) {
  Reduction red = reduce_penalty_matching(src, penalty);
  PenaltyMatchingOutcome out;
  out.target_outcome = solve_truncated(red.target, penalty + 1);
  out.found = out.target_outcome.found();
  if (out.found) out.matching = red.map.lift(out.target_outcome.assignment);
  return out;
}

// Popular matching through the last-resort/dummy reduction and the
// two-level truncation.
inline PenaltyMatchingOutcome solve_popular_matching(const Instance& src) {
  Reduction red = reduce_popular_matching(src);
  PenaltyMatchingOutcome out;
  out.target_outcome = solve_truncated(red.target, 2);
  out.found = out.target_outcome.found();
  if (out.found) out.matching = red.map.lift(out.target_outcome.assignment);
  return out;
}

// ---------------------------------------------------------------------------
// Housing markets

struct HousingMarket {
  std::vector<std::string> agents;
  std::vector<std::pair<int, int>> arcs;  // (from, to): from accepts to's house
  // Per agent: (better arc, worse arc) pairs over arcs leaving that agent.
  std::vector<std::vector<std::pair<int, int>>> preferences;

  ValidationReport validate() const {
    using Kind = Violation::Kind;
    ValidationReport report;
    const int n = static_cast<int>(agents.size());
    std::set<std::string> names;
    for (const auto& a : agents)
      if (!names.insert(a).second)
        report.violations.push_back(
            {Kind::kDuplicateIdentifier,
             "duplicate agent '" + a + "' (endowments must be distinct)"});
    std::set<std::pair<int, int>> seen;
    for (auto [from, to] : arcs) {
      if (from < 0 || from >= n || to < 0 || to >= n) {
        report.violations.push_back(
            {Kind::kUnknownIdentifier, "arc references an unknown agent"});
        continue;
      }
      if (from == to)
        report.violations.push_back(
            {Kind::kNonEdgePreference, "self-arc at agent '" + agents[from] + "'"});
      if (!seen.insert({from, to}).second)
        report.violations.push_back(
            {Kind::kDuplicateEdge, "duplicate arc ('" + agents[from] + "', '" +
                                       agents[to] + "')"});
    }
    if (!preferences.empty() && static_cast<int>(preferences.size()) != n)
      report.violations.push_back(
          {Kind::kUnknownIdentifier, "preference table size mismatch"});
    for (int a = 0; a < static_cast<int>(preferences.size()); ++a)
      for (auto [x, y] : preferences[a])
        for (int arc : {x, y})
          if (arc < 0 || arc >= static_cast<int>(arcs.size()) ||
              arcs[arc].first != a)
            report.violations.push_back(
                {Kind::kNonEdgePreference,
                 "preference of agent '" + agents[a] +
                     "' ranks an arc that does not leave it"});
    return report;
  }
};

// Arc subset forming vertex-disjoint directed cycles.
struct Allocation {
  std::vector<std::pair<int, int>> arcs;  // sorted (from, to)

  // Trading cycles, each starting at its smallest agent, ordered by start.
  std::vector<std::vector<int>> cycles() const {
    std::map<int, int> next(arcs.begin(), arcs.end());
    std::set<int> done;
    std::vector<std::vector<int>> out;
    for (auto [start, unused] : next) {
      if (done.count(start)) continue;
      std::vector<int> cycle;
      int cur = start;
      while (!done.count(cur)) {
        done.insert(cur);
        cycle.push_back(cur);
        cur = next.at(cur);
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }
  friend bool operator==(const Allocation&, const Allocation&) = default;
};

// Throws PreconditionError unless the arcs are vertex-disjoint cycles.
inline void require_disjoint_cycles(const std::vector<std::pair<int, int>>& arcs) {
  std::map<int, int> out_deg, in_deg;
  for (auto [from, to] : arcs) {
    if (from == to) throw PreconditionError("allocation contains a self-arc");
    if (++out_deg[from] > 1 || ++in_deg[to] > 1)
      throw PreconditionError("allocation arcs are not vertex-disjoint");
  }
  for (auto [v, d] : out_deg)
    if (in_deg[v] != d)
      throw PreconditionError("allocation arcs do not close into cycles");
  for (auto [v, d] : in_deg)
    if (out_deg[v] != d)
      throw PreconditionError("allocation arcs do not close into cycles");
}

// G_D: objects are houses (house j belongs to agent j); each arc (a, a')
// becomes edge (a, house(a')); (a, house(a)) is a's unique worst choice.
inline Reduction housing_to_assignment(const HousingMarket& market) {
  ValidationReport report = market.validate();
  if (!report.ok()) throw InputError("invalid housing market: " + report.summary());
  const int n = static_cast<int>(market.agents.size());
  InstanceDraft draft;
  detail::NameRegistry names;
  for (const auto& a : market.agents) draft.add_agent(names.claim(a));
  for (const auto& a : market.agents) draft.add_object(names.claim("__house:" + a));
  Reduction red;
  red.map.kind = ReductionKind::kHousing;
  red.map.source_agents = n;
  red.map.source_objects = 0;
  for (int a = 0; a < n; ++a) {
    red.map.agent_origin.push_back({NodeRole::kOriginal, a, 0});
    red.map.object_origin.push_back({NodeRole::kHouse, a, 0});
    red.map.agent_forward.push_back(a);
  }
  for (auto [from, to] : market.arcs) {
    draft.add_edge(from, to);
    draft.prefer(from, to, from);
  }
  for (int a = 0; a < n; ++a) draft.add_edge(a, a);
  for (int a = 0; a < static_cast<int>(market.preferences.size()); ++a)
    for (auto [x, y] : market.preferences[a])
      draft.prefer(a, market.arcs[x].second, market.arcs[y].second);
  red.target = draft.build();
  return red;
}

// Allocation whose arcs are the non-self edges of an assignment of G_D.
inline Allocation assignment_to_allocation(const Reduction& red,
                                           const Matching& m) {
  if (red.map.kind != ReductionKind::kHousing)
    throw PreconditionError("assignment_to_allocation: not a housing reduction");
  if (!m.is_perfect() || m.num_agents() != red.target.num_agents())
    throw PreconditionError("assignment_to_allocation: matching is not perfect");
  Allocation alloc;
  for (const Edge& e : m.pairs()) {
    const int owner = red.map.object_origin[e.object].source;
    if (owner != e.agent) alloc.arcs.emplace_back(e.agent, owner);
  }
  std::sort(alloc.arcs.begin(), alloc.arcs.end());
  require_disjoint_cycles(alloc.arcs);
  return alloc;
}

// M_S: traders take the house their arc points to, everyone else stays.
inline Matching allocation_to_assignment(const Reduction& red,
                                         const Allocation& alloc) {
  require_disjoint_cycles(alloc.arcs);
  const int n = red.target.num_agents();
  Matching m(n, n);
  for (auto [from, to] : alloc.arcs) {
    if (!red.target.edge_id(from, to))
      throw PreconditionError("allocation uses an arc not in the market");
    m.match(from, to);
  }
  for (int a = 0; a < n; ++a)
    if (!m.agent_matched(a)) m.match(a, a);
  return m;
}

// ---------------------------------------------------------------------------
// Weak rankings -> strict rankings

struct WeakToStrict {
  Reduction reduction;
  int q = 0;  // margin offset: number of fully indifferent tier agents
};

// Two-stage transform. Stage one replaces each agent v with tiers
// T_1 > ... > T_r by v (ranking new tier objects t_1 > ... > t_r strictly)
// plus tier agents a_i indifferent over T_i ∪ {t_i}. Stage two replaces each
// tier agent a by a strict gadget: a and two copies rank new objects
// top_1 > top_2 > Nbr(a) (neighbors in input order). G admits an assignment
// with margin <= k iff the output admits one with margin <= k + q.
inline WeakToStrict weak_to_strict(const Instance& src) {
  for (int a = 0; a < src.num_agents(); ++a)
    if (!src.is_weak_ranking(a))
      throw PreconditionError("weak_to_strict: preferences of agent '" +
                              src.agent_name(a) + "' are not a weak ranking");
  detail::NameRegistry names(src);
  InstanceDraft draft;
  WeakToStrict out;
  ReductionMap& map = out.reduction.map;
  map.kind = ReductionKind::kWeakToStrict;
  map.source_agents = src.num_agents();
  map.source_objects = src.num_objects();
  for (int a = 0; a < src.num_agents(); ++a) {
    draft.add_agent(src.agent_name(a));
    map.agent_origin.push_back({NodeRole::kOriginal, a, 0});
    map.agent_forward.push_back(a);
  }
  for (int b = 0; b < src.num_objects(); ++b) {
    draft.add_object(src.object_name(b));
    map.object_origin.push_back({NodeRole::kOriginal, b, 0});
    map.object_forward.push_back(b);
  }
  map.tier_agents.resize(src.num_agents());
  map.tier_objects.resize(src.num_agents());

  for (int v = 0; v < src.num_agents(); ++v) {
    const std::string& name = src.agent_name(v);
    const auto tiers = src.tiers(v);
    for (std::size_t i = 0; i < tiers.size(); ++i) {
      const std::string tag = name + ":" + std::to_string(i + 1);
      const int t = draft.add_agent(names.claim("__tier:" + tag));
      map.agent_origin.push_back({NodeRole::kTierAgent, v, static_cast<int>(i)});
      const int tobj = draft.add_object(names.claim("__tierobj:" + tag));
      map.object_origin.push_back({NodeRole::kTierObject, v, static_cast<int>(i)});
      map.tier_agents[v].push_back(t);
      map.tier_objects[v].push_back(tobj);
      draft.add_edge(v, tobj);

      std::array<int, 2> copies{};
      std::array<int, 2> tops{};
      for (int j = 0; j < 2; ++j) {
        copies[j] = draft.add_agent(
            names.claim("__twin:" + tag + ":" + std::to_string(j + 1)));
        map.agent_origin.push_back({NodeRole::kGadgetAgent, t, j});
        tops[j] = draft.add_object(
            names.claim("__top:" + tag + ":" + std::to_string(j + 1)));
        map.object_origin.push_back({NodeRole::kGadgetObject, t, j});
      }
      map.twins[t] = copies;

      // Tier agent neighborhood in input order: the tier, then its tier
      // object.
      std::vector<int> nbr(tiers[i].begin(), tiers[i].end());
      nbr.push_back(tobj);
      std::vector<int> ranking{tops[0], tops[1]};
      ranking.insert(ranking.end(), nbr.begin(), nbr.end());
      for (int member : {t, copies[0], copies[1]}) {
        for (int b : ranking) draft.add_edge(member, b);
        for (std::size_t x = 0; x + 1 < ranking.size(); ++x)
          draft.prefer(member, ranking[x], ranking[x + 1]);
      }
      ++out.q;
    }
    const auto& tobjs = map.tier_objects[v];
    for (std::size_t i = 0; i + 1 < tobjs.size(); ++i)
      draft.prefer(v, tobjs[i], tobjs[i + 1]);
  }
  out.reduction.target = draft.build();
  return out;
}

}  // namespace popassign

#endif  // POPASSIGN_REDUCTIONS_HPP_
