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

// Test-side ground truth written independently of the library's oracle
// module: permutation-based enumeration, vote counting straight from
// compare(), literal predicate transcriptions and a housing-market election
// that never builds the assignment instance.

#ifndef POPASSIGN_TESTING_ORACLES_HPP_
#define POPASSIGN_TESTING_ORACLES_HPP_

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "popassign/instance.hpp"
#include "popassign/matching.hpp"
#include "popassign/popular.hpp"
#include "popassign/reductions.hpp"

namespace popassign::testing {

// Delta(N, M): agents preferring N minus agents preferring M; matched beats
// unmatched.
inline int direct_delta(const Instance& inst, const Matching& n,
                        const Matching& m, int penalty = 1) {
  int total = 0;
  for (int a = 0; a < inst.num_agents(); ++a) {
    const int bn = n.object_of(a);
    const int bm = m.object_of(a);
    if (bn == kUnmatched && bm == kUnmatched) continue;
    if (bm == kUnmatched) { total += penalty; continue; }
    if (bn == kUnmatched) { total -= penalty; continue; }
    if (bn == bm) continue;
    switch (inst.compare(a, bn, bm)) {
      case PrefComparison::kPrefers: ++total; break;
      case PrefComparison::kDispreferred: --total; break;
      case PrefComparison::kIndifferent: break;
    }
  }
  return total;
}

// Perfect matchings via object permutations.
inline std::vector<Matching> permutation_assignments(const Instance& inst) {
  std::vector<Matching> out;
  const int n = inst.num_agents();
  if (n != inst.num_objects()) return out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = inst.edge_id(a, perm[a]).has_value();
    if (!ok) continue;
    Matching m(n, n);
    for (int a = 0; a < n; ++a) m.match(a, perm[a]);
    out.push_back(std::move(m));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Every matching, including partial ones.
inline std::vector<Matching> all_matchings(const Instance& inst) {
  std::vector<Matching> out;
  Matching cur(inst.num_agents(), inst.num_objects());
  std::function<void(int)> rec = [&](int a) {
    if (a == inst.num_agents()) { out.push_back(cur); return; }
    rec(a + 1);
    for (int b : inst.neighbors(a)) {
      if (cur.object_matched(b)) continue;
      cur.match(a, b);
      rec(a + 1);
      cur.unmatch_agent(a);
    }
  };
  rec(0);
  return out;
}

// Assignments with their exact margins, by pairwise elections.
struct MarginTable {
  std::vector<Matching> assignments;
  std::vector<int> margin;

  explicit MarginTable(const Instance& inst)
      : assignments(permutation_assignments(inst)) {
    for (const Matching& m : assignments) {
      int worst = INT_MIN;
      for (const Matching& n : assignments)
        worst = std::max(worst, direct_delta(inst, n, m));
      margin.push_back(worst);
    }
  }
  int min_margin() const {
    return margin.empty() ? INT_MAX
                          : *std::min_element(margin.begin(), margin.end());
  }
  bool any_popular() const { return min_margin() <= 0; }
  std::vector<Matching> popular() const {
    std::vector<Matching> out;
    for (std::size_t i = 0; i < assignments.size(); ++i)
      if (margin[i] <= 0) out.push_back(assignments[i]);
    return out;
  }
  int margin_of(const Matching& m) const {
    for (std::size_t i = 0; i < assignments.size(); ++i)
      if (assignments[i] == m) return margin[i];
    return INT_MIN;
  }
};

// Penalty-weighted popularity against every matching.
inline bool direct_penalty_popular(const Instance& inst, const Matching& m,
                                   int penalty,
                                   const std::vector<Matching>& all) {
  for (const Matching& n : all)
    if (direct_delta(inst, n, m, penalty) > 0) return false;
  return true;
}

// Lambda-feasibility transcribed from its definition with compare().
inline bool literal_lambda_feasible(const Instance& inst,
                                    const std::vector<int>& level, int agent,
                                    int object, int lambda) {
  int top = 0;
  for (int b : inst.neighbors(agent)) top = std::max(top, level[b]);
  const int l = level[object];
  if (l >= top - lambda + 1) return true;
  auto someone_at_beats = [&](int lvl) {
    for (int b : inst.neighbors(agent))
      if (level[b] == lvl &&
          inst.compare(agent, b, object) == PrefComparison::kPrefers)
        return true;
    return false;
  };
  if (l == top - lambda) return !someone_at_beats(top);
  if (l == top - lambda - 1) {
    for (int b : inst.neighbors(agent))
      if (level[b] == top &&
          inst.compare(agent, object, b) != PrefComparison::kPrefers)
        return false;
    return !someone_at_beats(top - 1);
  }
  return false;
}

// Housing-market election straight on the market: an allocation maps each
// agent to the owner of the house it receives (itself when not trading).
struct MarketElection {
  int n = 0;
  std::vector<std::vector<char>> accepts;                 // accepts[a][b]
  std::vector<std::vector<std::vector<char>>> better;     // better[a][x][y]
  std::vector<std::vector<int>> allocations;              // target per agent

  explicit MarketElection(const HousingMarket& market)
      : n(static_cast<int>(market.agents.size())) {
    accepts.assign(n, std::vector<char>(n, 0));
    for (auto [from, to] : market.arcs) accepts[from][to] = 1;
    better.assign(n, std::vector<std::vector<char>>(n, std::vector<char>(n, 0)));
    for (int a = 0; a < n; ++a) {
      for (auto [x, y] : market.preferences[a])
        better[a][market.arcs[x].second][market.arcs[y].second] = 1;
      for (int b = 0; b < n; ++b)
        if (accepts[a][b]) better[a][b][a] = 1;  // own house is worst
      for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if (better[a][i][k] && better[a][k][j]) better[a][i][j] = 1;
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a) ok = perm[a] == a || accepts[a][perm[a]];
      if (ok) allocations.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  int delta(const std::vector<int>& x, const std::vector<int>& y) const {
    int total = 0;
    for (int a = 0; a < n; ++a) {
      if (better[a][x[a]][y[a]]) ++total;
      if (better[a][y[a]][x[a]]) --total;
    }
    return total;
  }
  bool popular(const std::vector<int>& x) const {
    for (const auto& y : allocations)
      if (delta(y, x) > 0) return false;
    return true;
  }
  bool any_popular() const {
    for (const auto& x : allocations)
      if (popular(x)) return true;
    return false;
  }
};

// For the weak-to-strict transform: the assignment of the strict instance
// that mirrors an assignment of the weak one. Each original agent takes the
// tier object of its partner's tier, that tier's agent takes the partner,
// other tier agents take their tier objects, and the two copies take the two
// top objects.
inline Matching mirror_assignment(const Instance& weak, const WeakToStrict& w2s,
                                  const Matching& m) {
  const Instance& g = w2s.reduction.target;
  const ReductionMap& map = w2s.reduction.map;
  Matching out(g.num_agents(), g.num_objects());
  for (int v = 0; v < weak.num_agents(); ++v) {
    const int partner = m.object_of(v);
    const auto tiers = weak.tiers(v);
    for (std::size_t i = 0; i < tiers.size(); ++i) {
      const int t = map.tier_agents[v][i];
      const bool chosen = std::find(tiers[i].begin(), tiers[i].end(), partner) !=
                          tiers[i].end();
      if (chosen) {
        out.match(v, map.tier_objects[v][i]);
        out.match(t, partner);
      } else {
        out.match(t, map.tier_objects[v][i]);
      }
      const auto copies = map.twins.at(t);
      for (int j = 0; j < 2; ++j) {
        const std::string top = "__top:" + weak.agent_name(v) + ":" +
                                std::to_string(i + 1) + ":" +
                                std::to_string(j + 1);
        out.match(copies[j], *g.find_object(top));
      }
    }
  }
  return out;
}

}  // namespace popassign::testing

#endif  // POPASSIGN_TESTING_ORACLES_HPP_
