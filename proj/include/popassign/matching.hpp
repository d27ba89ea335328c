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

// Bipartite matching kernels: Hopcroft-Karp for maximum cardinality and a
// shortest-augmenting-path Hungarian method for maximum-weight perfect
// matching. Left vertices are agents, right vertices are objects.

#ifndef POPASSIGN_MATCHING_HPP_
#define POPASSIGN_MATCHING_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "popassign/instance.hpp"

namespace popassign {

inline constexpr int kUnmatched = -1;

class Matching {
 public:
  Matching() = default;
  Matching(int num_agents, int num_objects)
      : object_of_(num_agents, kUnmatched), agent_of_(num_objects, kUnmatched) {}

  int num_agents() const { return static_cast<int>(object_of_.size()); }
  int num_objects() const { return static_cast<int>(agent_of_.size()); }

  void match(int agent, int object) {
    if (object_of_.at(agent) != kUnmatched || agent_of_.at(object) != kUnmatched)
      throw PreconditionError("matching: endpoint already matched");
    object_of_[agent] = object;
    agent_of_[object] = agent;
    ++size_;
  }
  void unmatch_agent(int agent) {
    const int object = object_of_.at(agent);
    if (object == kUnmatched) return;
    object_of_[agent] = kUnmatched;
    agent_of_[object] = kUnmatched;
    --size_;
  }

  int object_of(int agent) const { return object_of_.at(agent); }
  int agent_of(int object) const { return agent_of_.at(object); }
  bool agent_matched(int agent) const { return object_of(agent) != kUnmatched; }
  bool object_matched(int object) const {
    return agent_of(object) != kUnmatched;
  }

  int size() const { return size_; }
  bool is_perfect() const {
    return num_agents() == num_objects() && size_ == num_agents();
  }

  // Matched pairs ordered by agent index.
  std::vector<Edge> pairs() const {
    std::vector<Edge> out;
    out.reserve(size_);
    for (int a = 0; a < num_agents(); ++a)
      if (object_of_[a] != kUnmatched) out.push_back({a, object_of_[a]});
    return out;
  }

  friend bool operator==(const Matching& x, const Matching& y) {
    return x.object_of_ == y.object_of_ && x.agent_of_ == y.agent_of_;
  }

 private:
  std::vector<int> object_of_;
  std::vector<int> agent_of_;
  int size_ = 0;
};

// True iff every pair of m is an edge of the instance and sizes agree.
inline bool is_matching_of(const Instance& inst, const Matching& m) {
  if (m.num_agents() != inst.num_agents() ||
      m.num_objects() != inst.num_objects())
    return false;
  for (const Edge& e : m.pairs())
    if (!inst.edge_id(e.agent, e.object)) return false;
  return true;
}

// Builds a matching of the instance from pairs; throws InputError when a pair
// is not an edge or reuses an endpoint.
inline Matching matching_from_pairs(const Instance& inst,
                                    std::span<const Edge> pairs) {
  Matching m(inst.num_agents(), inst.num_objects());
  for (const Edge& e : pairs) {
    if (e.agent < 0 || e.agent >= inst.num_agents() || e.object < 0 ||
        e.object >= inst.num_objects() || !inst.edge_id(e.agent, e.object))
      throw InputError("matching pair is not an edge of the instance");
    if (m.agent_matched(e.agent) || m.object_matched(e.object))
      throw InputError("matching pairs share an endpoint");
    m.match(e.agent, e.object);
  }
  return m;
}

class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int left, int right) : right_(right), adj_(left) {}

  int left_size() const { return static_cast<int>(adj_.size()); }
  int right_size() const { return right_; }
  int num_edges() const { return num_edges_; }

  void add_edge(int left, int right) {
    if (left < 0 || left >= left_size() || right < 0 || right >= right_)
      throw PreconditionError("bipartite graph: edge endpoint out of range");
    auto& row = adj_[left];
    if (std::find(row.begin(), row.end(), right) != row.end())
      throw PreconditionError("bipartite graph: duplicate edge");
    row.push_back(right);
    ++num_edges_;
  }
  // Skips the duplicate check; callers guarantee uniqueness.
  void add_edge_unchecked(int left, int right) {
    adj_[left].push_back(right);
    ++num_edges_;
  }
  bool has_edge(int left, int right) const {
    const auto& row = adj_[left];
    return std::find(row.begin(), row.end(), right) != row.end();
  }
  std::span<const int> adjacent(int left) const { return adj_[left]; }

  static BipartiteGraph from_instance(const Instance& inst) {
    BipartiteGraph g(inst.num_agents(), inst.num_objects());
    for (int a = 0; a < inst.num_agents(); ++a)
      for (int b : inst.neighbors(a)) g.add_edge_unchecked(a, b);
    return g;
  }

 private:
  int right_ = 0;
  std::vector<std::vector<int>> adj_;
  int num_edges_ = 0;
};

// Hopcroft-Karp. Phases run a BFS from free left vertices in index order and
// then DFS augmentations in adjacency order, so the result is a deterministic
// function of the graph.
inline Matching maximum_matching(const BipartiteGraph& g) {
  const int n = g.left_size();
  Matching m(n, g.right_size());
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> dist(n);
  std::vector<int> mate_l(n, kUnmatched), mate_r(g.right_size(), kUnmatched);

  auto bfs = [&]() {
    std::vector<int> queue;
    queue.reserve(n);
    for (int u = 0; u < n; ++u) {
      if (mate_l[u] == kUnmatched) {
        dist[u] = 0;
        queue.push_back(u);
      } else {
        dist[u] = kInf;
      }
    }
    bool found = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int v : g.adjacent(u)) {
        const int w = mate_r[v];
        if (w == kUnmatched) {
          found = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return found;
  };

  // Iterative DFS along the layered graph.
  std::vector<std::size_t> it(n);
  auto dfs = [&](int root) {
    std::vector<int> path{root};
    while (!path.empty()) {
      const int u = path.back();
      auto adj = g.adjacent(u);
      bool advanced = false;
      while (it[u] < adj.size()) {
        const int v = adj[it[u]];
        const int w = mate_r[v];
        if (w == kUnmatched) {
          // Augment along the stack.
          int right = v;
          for (auto p = path.rbegin(); p != path.rend(); ++p) {
            const int left = *p;
            const int prev = mate_l[left];
            mate_l[left] = right;
            mate_r[right] = left;
            right = prev;
          }
          return true;
        }
        if (dist[w] == dist[u] + 1) {
          path.push_back(w);
          advanced = true;
          break;
        }
        ++it[u];
      }
      if (!advanced) {
        dist[u] = kInf;
        path.pop_back();
        if (!path.empty()) ++it[path.back()];
      }
    }
    return false;
  };

  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    for (int u = 0; u < n; ++u)
      if (mate_l[u] == kUnmatched) dfs(u);
  }
  for (int u = 0; u < n; ++u)
    if (mate_l[u] != kUnmatched) m.match(u, mate_l[u]);
  return m;
}

class WeightedBipartiteGraph {
 public:
  WeightedBipartiteGraph() = default;
  WeightedBipartiteGraph(int left, int right) : graph_(left, right),
                                                weights_(left) {}

  void add_edge(int left, int right, int weight) {
    graph_.add_edge(left, right);
    weights_[left].push_back(weight);
  }
  const BipartiteGraph& graph() const { return graph_; }
  int left_size() const { return graph_.left_size(); }
  int right_size() const { return graph_.right_size(); }
  std::span<const int> adjacent(int left) const {
    return graph_.adjacent(left);
  }
  // Weights parallel to adjacent(left).
  std::span<const int> weights(int left) const { return weights_[left]; }

 private:
  BipartiteGraph graph_;
  std::vector<std::vector<int>> weights_;
};

struct WeightedMatchingResult {
  Matching matching;
  std::int64_t total_weight = 0;
  // Optimal duals of the LP "min Σ y  s.t. y_l + y_r ≥ w(l,r)"; their sum
  // equals total_weight.
  std::vector<std::int64_t> left_dual;
  std::vector<std::int64_t> right_dual;
};

class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Maximum-weight perfect matching via the Hungarian method with potentials
// (minimizing negated weights). Only existing edges are relaxed; when no
// augmenting path exists the graph has no perfect matching and
// InfeasibleError is thrown. Rows are inserted in index order and ties go to
// the lowest column index.
inline WeightedMatchingResult max_weight_perfect_matching(
    const WeightedBipartiteGraph& g) {
  const int n = g.left_size();
  if (g.right_size() != n)
    throw InfeasibleError("perfect matching needs equal sides");
  using Cost = std::int64_t;
  constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;

  // 1-based arrays; column 0 is the virtual start.
  std::vector<Cost> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  std::vector<Cost> minv(n + 1);
  std::vector<char> used(n + 1);

  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      auto adj = g.adjacent(i0 - 1);
      auto w = g.weights(i0 - 1);
      for (std::size_t k = 0; k < adj.size(); ++k) {
        const int j = adj[k] + 1;
        if (used[j]) continue;
        const Cost cur = -static_cast<Cost>(w[k]) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
      }
      Cost delta = kInf;
      int j1 = -1;
      for (int j = 1; j <= n; ++j)
        if (!used[j] && minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      if (j1 < 0) throw InfeasibleError("graph admits no perfect matching");
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else if (minv[j] < kInf) {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  WeightedMatchingResult result;
  result.matching = Matching(n, n);
  result.left_dual.assign(n, 0);
  result.right_dual.assign(n, 0);
  for (int j = 1; j <= n; ++j) result.matching.match(p[j] - 1, j - 1);
  for (int i = 0; i < n; ++i) {
    const int j = result.matching.object_of(i);
    auto adj = g.adjacent(i);
    auto w = g.weights(i);
    for (std::size_t k = 0; k < adj.size(); ++k)
      if (adj[k] == j) result.total_weight += w[k];
  }
  // Dual of the min-cost problem is u_i + v_j ≤ -w; negate for the
  // max-weight covering LP.
  for (int i = 0; i < n; ++i) result.left_dual[i] = -u[i + 1];
  for (int j = 0; j < n; ++j) result.right_dual[j] = -v[j + 1];
  return result;
}

}  // namespace popassign

#endif  // POPASSIGN_MATCHING_HPP_
