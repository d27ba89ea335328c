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

// Bipartite instances with one-sided partial-order preferences.
//
// Agents (left side) rank their neighboring objects (right side) by a strict
// partial order. An InstanceDraft collects raw, unvalidated data; building it
// validates, closes each preference relation transitively and produces an
// immutable Instance with dense integer indices in input order.

#ifndef POPASSIGN_INSTANCE_HPP_
#define POPASSIGN_INSTANCE_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace popassign {

// Raised for malformed or invalid user input (documents, identifiers, edges).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an operation's precondition on its arguments does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class PrefComparison { kPrefers, kDispreferred, kIndifferent };

struct Edge {
  int agent = -1;
  int object = -1;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Violation {
  enum class Kind {
    kDuplicateIdentifier,
    kSharedIdentifier,
    kUnknownIdentifier,
    kDuplicateEdge,
    kNonEdgePreference,
    kCyclicPreference,
  };
  Kind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(Violation::Kind kind) const {
    return std::any_of(violations.begin(), violations.end(),
                       [kind](const Violation& v) { return v.kind == kind; });
  }
  std::string summary() const {
    std::string out;
    for (const Violation& v : violations) {
      if (!out.empty()) out += "; ";
      out += v.message;
    }
    return out;
  }
};

class Instance;

// Unvalidated instance data, indexed by position. Names are resolved by the
// parser; reductions add nodes by index directly.
class InstanceDraft {
 public:
  int add_agent(std::string name) {
    agents_.push_back(std::move(name));
    raw_pairs_.emplace_back();
    return static_cast<int>(agents_.size()) - 1;
  }
  int add_object(std::string name) {
    objects_.push_back(std::move(name));
    return static_cast<int>(objects_.size()) - 1;
  }
  void add_edge(int agent, int object) { edges_.push_back({agent, object}); }
  // Records better ≻_agent worse.
  void prefer(int agent, int better, int worse) {
    raw_pairs_.at(agent).emplace_back(better, worse);
  }
  // Weak-ranking shorthand: every object of an earlier tier beats every
  // object of a later tier.
  void prefer_tiers(int agent, const std::vector<std::vector<int>>& tiers) {
    for (std::size_t i = 0; i < tiers.size(); ++i)
      for (std::size_t j = i + 1; j < tiers.size(); ++j)
        for (int better : tiers[i])
          for (int worse : tiers[j]) prefer(agent, better, worse);
  }

  int num_agents() const { return static_cast<int>(agents_.size()); }
  int num_objects() const { return static_cast<int>(objects_.size()); }
  const std::vector<std::string>& agents() const { return agents_; }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::pair<int, int>>& raw_pairs(int agent) const {
    return raw_pairs_.at(agent);
  }

  ValidationReport validate() const;
  // Throws InputError carrying the validation summary when invalid.
  Instance build() const;

 private:
  std::vector<std::string> agents_;
  std::vector<std::string> objects_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, int>>> raw_pairs_;
};

class Instance {
 public:
  Instance() = default;

  int num_agents() const { return static_cast<int>(agents_.size()); }
  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::string& agent_name(int agent) const { return agents_.at(agent); }
  const std::string& object_name(int object) const {
    return objects_.at(object);
  }
  const std::vector<std::string>& agent_names() const { return agents_; }
  const std::vector<std::string>& object_names() const { return objects_; }

  std::optional<int> find_agent(std::string_view name) const {
    auto it = agent_index_.find(std::string(name));
    if (it == agent_index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<int> find_object(std::string_view name) const {
    auto it = object_index_.find(std::string(name));
    if (it == object_index_.end()) return std::nullopt;
    return it->second;
  }

  // Neighbors of an agent in input order; position i of neighbors() and
  // incident_edges() refer to the same edge.
  std::span<const int> neighbors(int agent) const {
    return {nbr_objects_.data() + offsets_[agent],
            nbr_objects_.data() + offsets_[agent + 1]};
  }
  std::span<const int> incident_edges(int agent) const {
    return {nbr_edges_.data() + offsets_[agent],
            nbr_edges_.data() + offsets_[agent + 1]};
  }
  int degree(int agent) const { return offsets_[agent + 1] - offsets_[agent]; }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_.at(id); }
  std::optional<int> edge_id(int agent, int object) const {
    auto it = edge_index_.find(key(agent, object));
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
  }
  // Position of the edge within its agent's neighbor list.
  int local_position(int edge_id) const { return edge_local_[edge_id]; }

  // i-th neighbor ≻_agent j-th neighbor, by local positions. O(1).
  bool prefers_local(int agent, int i, int j) const {
    const int d = degree(agent);
    return relation_[rel_offsets_[agent] + i * d + j] != 0;
  }
  // better ≻_agent worse. Both objects must be neighbors of the agent.
  bool prefers(int agent, int better, int worse) const {
    return prefers_local(agent, require_local(agent, better),
                         require_local(agent, worse));
  }
  PrefComparison compare(int agent, int b, int b2) const {
    const int i = require_local(agent, b);
    const int j = require_local(agent, b2);
    if (prefers_local(agent, i, j)) return PrefComparison::kPrefers;
    if (prefers_local(agent, j, i)) return PrefComparison::kDispreferred;
    return PrefComparison::kIndifferent;
  }

  // Closed relation of an agent as (better, worse) object pairs, ordered by
  // local positions.
  std::vector<std::pair<int, int>> preference_pairs(int agent) const {
    std::vector<std::pair<int, int>> out;
    auto nbrs = neighbors(agent);
    for (int i = 0; i < degree(agent); ++i)
      for (int j = 0; j < degree(agent); ++j)
        if (prefers_local(agent, i, j)) out.emplace_back(nbrs[i], nbrs[j]);
    return out;
  }

  // True iff indifference is transitive for this agent.
  bool is_weak_ranking(int agent) const {
    const int d = degree(agent);
    auto indiff = [&](int i, int j) {
      return !prefers_local(agent, i, j) && !prefers_local(agent, j, i);
    };
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (indiff(i, j))
          for (int k = 0; k < d; ++k)
            if (indiff(j, k) && !indiff(i, k)) return false;
    return true;
  }
  bool has_weak_rankings() const {
    for (int a = 0; a < num_agents(); ++a)
      if (!is_weak_ranking(a)) return false;
    return true;
  }
  // Total order over neighbors.
  bool is_strict_ranking(int agent) const {
    const int d = degree(agent);
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (!prefers_local(agent, i, j) && !prefers_local(agent, j, i))
          return false;
    return true;
  }

  // Indifference classes of a weak ranking, best first; objects within a tier
  // keep input order. Throws PreconditionError if the agent's preference is
  // not a weak ranking.
  std::vector<std::vector<int>> tiers(int agent) const {
    if (!is_weak_ranking(agent))
      throw PreconditionError("preferences of agent '" + agent_name(agent) +
                              "' are not a weak ranking");
    const int d = degree(agent);
    auto nbrs = neighbors(agent);
    // In a weak order the number of strictly better neighbors identifies the
    // tier.
    std::vector<int> above(d, 0);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (prefers_local(agent, j, i)) ++above[i];
    std::vector<int> distinct(above);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    std::vector<std::vector<int>> out(distinct.size());
    for (int i = 0; i < d; ++i) {
      auto pos = std::lower_bound(distinct.begin(), distinct.end(), above[i]) -
                 distinct.begin();
      out[pos].push_back(nbrs[i]);
    }
    return out;
  }

  // Copies the instance back into a draft (closed pairs as raw pairs).
  InstanceDraft to_draft() const {
    InstanceDraft draft;
    for (const auto& name : agents_) draft.add_agent(name);
    for (const auto& name : objects_) draft.add_object(name);
    for (const Edge& e : edges_) draft.add_edge(e.agent, e.object);
    for (int a = 0; a < num_agents(); ++a)
      for (auto [better, worse] : preference_pairs(a))
        draft.prefer(a, better, worse);
    return draft;
  }

 private:
  friend class InstanceDraft;

  static std::uint64_t key(int agent, int object) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(agent))
            << 32) |
           static_cast<std::uint32_t>(object);
  }
  int require_local(int agent, int object) const {
    auto id = edge_id(agent, object);
    if (!id)
      throw PreconditionError("object '" +
                              (object >= 0 && object < num_objects()
                                   ? object_name(object)
                                   : std::to_string(object)) +
                              "' is not a neighbor of agent '" +
                              agent_name(agent) + "'");
    return edge_local_[*id];
  }

  std::vector<std::string> agents_;
  std::vector<std::string> objects_;
  std::unordered_map<std::string, int> agent_index_;
  std::unordered_map<std::string, int> object_index_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, int> edge_index_;
  std::vector<int> edge_local_;
  std::vector<int> offsets_{0};
  std::vector<int> nbr_objects_;
  std::vector<int> nbr_edges_;
  std::vector<std::size_t> rel_offsets_;
  std::vector<std::uint8_t> relation_;
};

inline ValidationReport InstanceDraft::validate() const {
  using Kind = Violation::Kind;
  ValidationReport report;
  auto add = [&](Kind kind, std::string message) {
    report.violations.push_back({kind, std::move(message)});
  };

  std::unordered_set<std::string> agent_names;
  for (const auto& name : agents_)
    if (!agent_names.insert(name).second)
      add(Kind::kDuplicateIdentifier, "duplicate agent identifier '" + name + "'");
  std::unordered_set<std::string> object_names;
  for (const auto& name : objects_) {
    if (!object_names.insert(name).second)
      add(Kind::kDuplicateIdentifier,
          "duplicate object identifier '" + name + "'");
    if (agent_names.count(name))
      add(Kind::kSharedIdentifier,
          "identifier '" + name + "' names both an agent and an object");
  }

  const int na = num_agents();
  const int nb = num_objects();
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::unordered_set<int>> adjacent(na);
  for (const Edge& e : edges_) {
    if (e.agent < 0 || e.agent >= na || e.object < 0 || e.object >= nb) {
      add(Kind::kUnknownIdentifier, "edge references an unknown node");
      continue;
    }
    std::uint64_t k = (static_cast<std::uint64_t>(e.agent) << 32) |
                      static_cast<std::uint32_t>(e.object);
    if (!seen.insert(k).second)
      add(Kind::kDuplicateEdge, "duplicate edge ('" + agents_[e.agent] +
                                    "', '" + objects_[e.object] + "')");
    adjacent[e.agent].insert(e.object);
  }

  for (int a = 0; a < na; ++a) {
    bool pairs_ok = true;
    for (auto [better, worse] : raw_pairs_[a]) {
      if (better < 0 || better >= nb || worse < 0 || worse >= nb) {
        add(Kind::kUnknownIdentifier,
            "preference of agent '" + agents_[a] + "' names an unknown object");
        pairs_ok = false;
        continue;
      }
      for (int b : {better, worse}) {
        if (!adjacent[a].count(b)) {
          add(Kind::kNonEdgePreference,
              "preference of agent '" + agents_[a] + "' mentions '" +
                  objects_[b] + "' which is not a neighbor");
          pairs_ok = false;
        }
      }
    }
    if (!pairs_ok) continue;

    // Cycle detection on the raw pair digraph (a self pair is a 1-cycle).
    std::unordered_map<int, std::vector<int>> succ;
    for (auto [better, worse] : raw_pairs_[a]) succ[better].push_back(worse);
    std::unordered_map<int, int> color;  // 0 new, 1 on stack, 2 done
    bool cyclic = false;
    for (const auto& [start, unused] : succ) {
      if (cyclic || color[start] != 0) continue;
      std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
      color[start] = 1;
      while (!stack.empty() && !cyclic) {
        auto& [node, next] = stack.back();
        auto it = succ.find(node);
        if (it == succ.end() || next == it->second.size()) {
          color[node] = 2;
          stack.pop_back();
          continue;
        }
        int child = it->second[next++];
        if (color[child] == 1) {
          cyclic = true;
        } else if (color[child] == 0) {
          color[child] = 1;
          stack.emplace_back(child, 0);
        }
      }
    }
    if (cyclic)
      add(Kind::kCyclicPreference, "preferences of agent '" + agents_[a] +
                                       "' contain a cycle (not a strict "
                                       "partial order)");
  }
  return report;
}

inline Instance InstanceDraft::build() const {
  ValidationReport report = validate();
  if (!report.ok()) throw InputError("invalid instance: " + report.summary());

  Instance inst;
  inst.agents_ = agents_;
  inst.objects_ = objects_;
  for (int i = 0; i < num_agents(); ++i) inst.agent_index_[agents_[i]] = i;
  for (int i = 0; i < num_objects(); ++i) inst.object_index_[objects_[i]] = i;

  // Edges grouped by agent, input order preserved within an agent; edge ids
  // follow that grouping.
  std::vector<std::vector<int>> by_agent(num_agents());
  for (const Edge& e : edges_) by_agent[e.agent].push_back(e.object);
  for (int a = 0; a < num_agents(); ++a) {
    for (int b : by_agent[a]) {
      const int id = static_cast<int>(inst.edges_.size());
      inst.edge_local_.push_back(static_cast<int>(inst.nbr_objects_.size()) -
                                 inst.offsets_.back());
      inst.edges_.push_back({a, b});
      inst.edge_index_[Instance::key(a, b)] = id;
      inst.nbr_objects_.push_back(b);
      inst.nbr_edges_.push_back(id);
    }
    inst.offsets_.push_back(static_cast<int>(inst.nbr_objects_.size()));
  }

  for (int a = 0; a < num_agents(); ++a) {
    const int d = inst.degree(a);
    const std::size_t base = inst.relation_.size();
    inst.rel_offsets_.push_back(base);
    inst.relation_.resize(base + static_cast<std::size_t>(d) * d, 0);
    auto at = [&](int i, int j) -> std::uint8_t& {
      return inst.relation_[base + static_cast<std::size_t>(i) * d + j];
    };
    for (auto [better, worse] : raw_pairs_[a]) {
      int i = inst.edge_local_[*inst.edge_id(a, better)];
      int j = inst.edge_local_[*inst.edge_id(a, worse)];
      at(i, j) = 1;
    }
    // Transitive closure by repeated composition (Warshall order).
    for (int k = 0; k < d; ++k)
      for (int i = 0; i < d; ++i)
        if (at(i, k))
          for (int j = 0; j < d; ++j)
            if (at(k, j)) at(i, j) = 1;
  }
  return inst;
}

// Re-checks the invariants of an already built instance: unique identifiers,
// edges, and that each closed relation is irreflexive and transitive.
inline ValidationReport validate(const Instance& inst) {
  ValidationReport report = inst.to_draft().validate();
  for (int a = 0; a < inst.num_agents(); ++a) {
    const int d = inst.degree(a);
    bool transitive = true;
    for (int i = 0; i < d && transitive; ++i)
      for (int j = 0; j < d && transitive; ++j)
        if (inst.prefers_local(a, i, j))
          for (int k = 0; k < d; ++k)
            if (inst.prefers_local(a, j, k) && !inst.prefers_local(a, i, k)) {
              transitive = false;
              break;
            }
    if (!transitive)
      report.violations.push_back(
          {Violation::Kind::kCyclicPreference,
           "relation of agent '" + inst.agent_name(a) + "' is not transitive"});
  }
  return report;
}

inline ValidationReport validate(const InstanceDraft& draft) {
  return draft.validate();
}

}  // namespace popassign

#endif  // POPASSIGN_INSTANCE_HPP_
