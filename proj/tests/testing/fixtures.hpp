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

// Small named instances and builders shared by the tests.

#ifndef POPASSIGN_TESTING_FIXTURES_HPP_
#define POPASSIGN_TESTING_FIXTURES_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "popassign/generator.hpp"
#include "popassign/instance.hpp"
#include "popassign/matching.hpp"

namespace popassign::testing {

// Builds an instance from names: edges as (agent, object) name pairs and
// preferences as (agent, better, worse).
struct NamedSpec {
  std::vector<std::string> agents;
  std::vector<std::string> objects;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::vector<std::string>> prefs;  // {agent, better, worse}
};

inline Instance build(const NamedSpec& spec) {
  InstanceDraft d;
  for (const auto& a : spec.agents) d.add_agent(a);
  for (const auto& b : spec.objects) d.add_object(b);
  auto agent = [&](const std::string& n) {
    for (int i = 0; i < static_cast<int>(spec.agents.size()); ++i)
      if (spec.agents[i] == n) return i;
    throw std::runtime_error("fixture: unknown agent " + n);
  };
  auto object = [&](const std::string& n) {
    for (int i = 0; i < static_cast<int>(spec.objects.size()); ++i)
      if (spec.objects[i] == n) return i;
    throw std::runtime_error("fixture: unknown object " + n);
  };
  for (const auto& [a, b] : spec.edges) d.add_edge(agent(a), object(b));
  for (const auto& p : spec.prefs) d.prefer(agent(p[0]), object(p[1]), object(p[2]));
  return d.build();
}

// Complete bipartite graph on n agents/objects, every agent ranking
// b1 > b2 > ... > bn.
inline Instance unanimous_complete(int n) {
  InstanceDraft d;
  for (int i = 0; i < n; ++i) d.add_agent("a" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) d.add_object("b" + std::to_string(i + 1));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) d.add_edge(a, b);
    for (int b = 0; b + 1 < n; ++b) d.prefer(a, b, b + 1);
  }
  return d.build();
}

// Three agents over x, y, z, complete; a: x > z, y > z; b: x > z;
// c: y > x, y > z.
inline Instance partial_order_example() {
  NamedSpec s{{"a", "b", "c"}, {"x", "y", "z"}, {}, {}};
  for (const auto& a : s.agents)
    for (const auto& b : s.objects) s.edges.emplace_back(a, b);
  s.prefs = {{"a", "x", "z"}, {"a", "y", "z"}, {"b", "x", "z"},
             {"c", "y", "x"}, {"c", "y", "z"}};
  return build(s);
}

// a1, a2: b1 > b2; a3: b1 > b2 > b3. No popular matching, but a popular
// assignment exists.
inline Instance assignment_not_matching_example() {
  NamedSpec s{{"a1", "a2", "a3"},
              {"b1", "b2", "b3"},
              {{"a1", "b1"}, {"a1", "b2"}, {"a2", "b1"}, {"a2", "b2"},
               {"a3", "b1"}, {"a3", "b2"}, {"a3", "b3"}},
              {{"a1", "b1", "b2"}, {"a2", "b1", "b2"}, {"a3", "b1", "b2"},
               {"a3", "b2", "b3"}}};
  return build(s);
}

inline Matching by_names(const Instance& inst,
                         const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<Edge> edges;
  for (const auto& [a, b] : pairs)
    edges.push_back({*inst.find_agent(a), *inst.find_object(b)});
  return matching_from_pairs(inst, edges);
}

inline PrefStyle style_for(std::uint64_t i) {
  static constexpr PrefStyle kStyles[] = {PrefStyle::kStrict, PrefStyle::kWeak,
                                          PrefStyle::kPartial};
  return kStyles[i % 3];
}

// Random instance with a planted perfect matching; style cycles with the
// seed unless fixed.
inline Instance random_assignment_instance(int n, std::uint64_t seed,
                                           PrefStyle style, double density,
                                           double correlation = 0.0) {
  GeneratorOptions opt;
  opt.agents = n;
  opt.objects = n;
  opt.density = density;
  opt.style = style;
  opt.seed = seed;
  opt.plant_perfect_matching = true;
  opt.correlation = correlation;
  return generate_instance(opt);
}

// Mixed corpus: the seed picks style, density and how strongly agents share
// a common ranking (strong sharing makes popular assignments rare).
inline Instance mixed_instance(int n, std::uint64_t seed) {
  static constexpr double kCorrelation[] = {0.0, 0.7, 0.9, 1.0};
  static constexpr double kDensity[] = {0.5, 0.8, 1.0};
  return random_assignment_instance(n, seed, style_for(seed),
                                    kDensity[(seed / 3) % 3],
                                    kCorrelation[(seed / 9) % 4]);
}

}  // namespace popassign::testing

#endif  // POPASSIGN_TESTING_FIXTURES_HPP_
