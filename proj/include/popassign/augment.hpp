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

#ifndef POPASSIGN_AUGMENT_HPP_
#define POPASSIGN_AUGMENT_HPP_

#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "popassign/instance.hpp"
#include "popassign/matching.hpp"

namespace popassign {

namespace detail {

// Tracks identifiers in use so generated names never shadow user names.
class NameRegistry {
 public:
  explicit NameRegistry(const Instance& inst) {
    for (const auto& n : inst.agent_names()) taken_.insert(n);
    for (const auto& n : inst.object_names()) taken_.insert(n);
  }
  NameRegistry() = default;
  const std::string& claim(std::string name) {
    auto [it, inserted] = taken_.insert(std::move(name));
    if (!inserted)
      throw InputError("generated identifier '" + *it +
                       "' collides with an existing identifier");
    return *it;
  }

 private:
  std::unordered_set<std::string> taken_;
};

// Copies agents, objects, edges and closed preferences of inst into draft.
inline void copy_into(const Instance& inst, InstanceDraft& draft) {
  for (const auto& n : inst.agent_names()) draft.add_agent(n);
  for (const auto& n : inst.object_names()) draft.add_object(n);
  for (const Edge& e : inst.edges()) draft.add_edge(e.agent, e.object);
  for (int a = 0; a < inst.num_agents(); ++a)
    for (auto [better, worse] : inst.preference_pairs(a))
      draft.prefer(a, better, worse);
}

}  // namespace detail

// Relates an instance to its perfect-matching augmentation. Original agents
// and objects keep their indices; added nodes follow them.
struct AugmentationMap {
  int original_agents = 0;
  int original_objects = 0;
  int maximum_matching_size = 0;
  std::vector<int> dummy_agents;        // indices in the augmented instance
  std::vector<int> artificial_objects;  // indices in the augmented instance

  bool is_dummy(int agent) const { return agent >= original_agents; }
  bool is_artificial(int object) const { return object >= original_objects; }

  // Drops every pair touching a dummy agent or an artificial object.
  Matching project(const Matching& augmented) const {
    Matching out(original_agents, original_objects);
    for (const Edge& e : augmented.pairs())
      if (!is_dummy(e.agent) && !is_artificial(e.object))
        out.match(e.agent, e.object);
    return out;
  }

  // Extends a maximum matching of the original instance: unmatched agents
  // take artificial objects, dummies take unmatched original objects, both in
  // index order.
  Matching extend(const Matching& original) const {
    if (original.size() != maximum_matching_size)
      throw PreconditionError("extend: matching is not maximum");
    const int n = original_agents + static_cast<int>(dummy_agents.size());
    Matching out(n, n);
    for (const Edge& e : original.pairs()) out.match(e.agent, e.object);
    std::size_t next_art = 0;
    for (int a = 0; a < original_agents; ++a)
      if (!original.agent_matched(a))
        out.match(a, artificial_objects.at(next_art++));
    std::size_t next_dummy = 0;
    for (int b = 0; b < original_objects; ++b)
      if (!original.object_matched(b))
        out.match(dummy_agents.at(next_dummy++), b);
    return out;
  }
};

struct Augmentation {
  Instance instance;
  AugmentationMap map;
};

// Adds |B| - nu dummy agents adjacent (and indifferent) to every original
// object, and |A| - nu artificial objects adjacent to every original agent,
// ranked strictly below all of that agent's original neighbors and tied among
// themselves. nu is the maximum matching size of the input.
inline Augmentation augment_to_perfect(const Instance& inst) {
  const int nu = maximum_matching(BipartiteGraph::from_instance(inst)).size();
  const int na = inst.num_agents();
  const int nb = inst.num_objects();
  detail::NameRegistry names(inst);
  InstanceDraft draft;
  detail::copy_into(inst, draft);

  Augmentation out;
  out.map.original_agents = na;
  out.map.original_objects = nb;
  out.map.maximum_matching_size = nu;
  for (int i = 0; i < nb - nu; ++i) {
    const int d = draft.add_agent(names.claim("__dummy:" + std::to_string(i)));
    out.map.dummy_agents.push_back(d);
    for (int b = 0; b < nb; ++b) draft.add_edge(d, b);
  }
  for (int i = 0; i < na - nu; ++i) {
    const int x = draft.add_object(names.claim("__art:" + std::to_string(i)));
    out.map.artificial_objects.push_back(x);
    for (int a = 0; a < na; ++a) {
      draft.add_edge(a, x);
      for (int b : inst.neighbors(a)) draft.prefer(a, b, x);
    }
  }
  out.instance = draft.build();
  return out;
}

}  // namespace popassign

#endif  // POPASSIGN_AUGMENT_HPP_
