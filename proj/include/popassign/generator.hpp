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

// Seeded random instances and housing markets. Sampling uses mt19937_64 with
// hand-rolled range reduction and shuffling, so output is identical across
// standard library implementations.

#ifndef POPASSIGN_GENERATOR_HPP_
#define POPASSIGN_GENERATOR_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "popassign/instance.hpp"
#include "popassign/reductions.hpp"

namespace popassign {

enum class PrefStyle { kStrict, kWeak, kPartial, kNone };

inline PrefStyle parse_pref_style(const std::string& s) {
  if (s == "strict") return PrefStyle::kStrict;
  if (s == "weak") return PrefStyle::kWeak;
  if (s == "partial") return PrefStyle::kPartial;
  if (s == "none") return PrefStyle::kNone;
  throw InputError("unknown preference style '" + s + "'");
}

struct GeneratorOptions {
  int agents = 4;
  int objects = 4;
  double density = 0.5;  // probability of each agent-object edge
  PrefStyle style = PrefStyle::kStrict;
  std::uint64_t seed = 1;
  // Adds a random perfect matching to the edge set (agents == objects).
  bool plant_perfect_matching = false;
  // Partial style: probability of each forward pair of the random DAG.
  double pair_density = 0.5;
  // Weight in [0, 1] of a shared object ranking in every agent's
  // preferences; 0 gives independent preferences, 1 a common master list.
  double correlation = 0.0;
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  // Uniform in [0, 1).
  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  bool coin(double p) { return p >= 1.0 || unit() < p; }
  // Uniform in [0, n) by rejection.
  int below(int n) {
    if (n <= 0) throw PreconditionError("Sampler::below: empty range");
    const std::uint64_t range = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t x;
    do x = rng_(); while (x >= limit);
    return static_cast<int>(x % range);
  }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
      std::swap(v[i], v[below(i + 1)]);
  }

 private:
  std::mt19937_64 rng_;
};

namespace detail {

// Random relation over `items` (indices into the caller's universe) in the
// requested style, delivered as better/worse pairs.
// With `shared` scores (one per universe index, in [0, 1)) and correlation
// c > 0, each item is keyed by c * shared + (1 - c) * private noise; the
// random order of the strict and partial styles and the tiers of the weak
// style follow the keys.
template <typename Emit>
void sample_preferences(Sampler& rng, PrefStyle style, double pair_density,
                        std::vector<int> items, Emit emit,
                        const std::vector<double>* shared = nullptr,
                        double correlation = 0.0) {
  const int d = static_cast<int>(items.size());
  const bool keyed = shared != nullptr && correlation > 0.0;
  std::vector<double> key;
  if (keyed && style != PrefStyle::kNone) {
    std::vector<std::pair<double, int>> scored;
    for (int x : items)
      scored.emplace_back(
          correlation * (*shared)[x] + (1.0 - correlation) * rng.unit(), x);
    std::sort(scored.begin(), scored.end());
    for (int i = 0; i < d; ++i) {
      items[i] = scored[i].second;
      key.push_back(scored[i].first);
    }
  }
  switch (style) {
    case PrefStyle::kNone:
      return;
    case PrefStyle::kStrict:
      if (!keyed) rng.shuffle(items);
      for (int i = 0; i + 1 < d; ++i) emit(items[i], items[i + 1]);
      return;
    case PrefStyle::kWeak: {
      std::vector<int> tier(d);
      for (int i = 0; i < d; ++i)
        tier[i] = keyed ? static_cast<int>(key[i] * d) : rng.below(d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (tier[i] < tier[j]) emit(items[i], items[j]);
      return;
    }
    case PrefStyle::kPartial:
      if (!keyed) rng.shuffle(items);
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
          if (rng.coin(pair_density)) emit(items[i], items[j]);
      return;
  }
}

}  // namespace detail

inline void check_options(const GeneratorOptions& opt) {
  if (opt.agents < 0 || opt.objects < 0)
    throw InputError("agent and object counts must be non-negative");
  if (!(opt.density >= 0.0 && opt.density <= 1.0))
    throw InputError("density must lie in [0, 1]");
  if (!(opt.pair_density >= 0.0 && opt.pair_density <= 1.0))
    throw InputError("pair density must lie in [0, 1]");
  if (!(opt.correlation >= 0.0 && opt.correlation <= 1.0))
    throw InputError("correlation must lie in [0, 1]");
  if (opt.plant_perfect_matching && opt.agents != opt.objects)
    throw InputError("a planted perfect matching needs equal side sizes");
}

inline Instance generate_instance(const GeneratorOptions& opt) {
  check_options(opt);
  Sampler rng(opt.seed);
  InstanceDraft draft;
  for (int a = 0; a < opt.agents; ++a) draft.add_agent("a" + std::to_string(a + 1));
  for (int b = 0; b < opt.objects; ++b) draft.add_object("b" + std::to_string(b + 1));
  std::vector<std::vector<char>> adj(opt.agents, std::vector<char>(opt.objects, 0));
  for (int a = 0; a < opt.agents; ++a)
    for (int b = 0; b < opt.objects; ++b) adj[a][b] = rng.coin(opt.density);
  if (opt.plant_perfect_matching) {
    std::vector<int> perm(opt.objects);
    for (int b = 0; b < opt.objects; ++b) perm[b] = b;
    rng.shuffle(perm);
    for (int a = 0; a < opt.agents; ++a) adj[a][perm[a]] = 1;
  }
  // Lower score = better; only drawn when used so uncorrelated output does
  // not depend on it.
  std::vector<double> shared;
  if (opt.correlation > 0.0)
    for (int b = 0; b < opt.objects; ++b) shared.push_back(rng.unit());
  for (int a = 0; a < opt.agents; ++a) {
    std::vector<int> nbrs;
    for (int b = 0; b < opt.objects; ++b)
      if (adj[a][b]) {
        draft.add_edge(a, b);
        nbrs.push_back(b);
      }
    detail::sample_preferences(
        rng, opt.style, opt.pair_density, nbrs,
        [&](int x, int y) { draft.prefer(a, x, y); }, &shared, opt.correlation);
  }
  return draft.build();
}

// Random market; `correlation` plays the role it has for instances, with one
// shared score per house.
inline HousingMarket generate_market(int agents, double density, PrefStyle style,
                                     std::uint64_t seed, double correlation = 0.0) {
  GeneratorOptions check{agents, agents, density, style, seed};
  check.correlation = correlation;
  check_options(check);
  Sampler rng(seed);
  std::vector<double> house_score;
  if (correlation > 0.0)
    for (int a = 0; a < agents; ++a) house_score.push_back(rng.unit());
  HousingMarket market;
  for (int a = 0; a < agents; ++a) market.agents.push_back("a" + std::to_string(a + 1));
  market.preferences.resize(agents);
  for (int a = 0; a < agents; ++a) {
    std::vector<int> out_arcs;
    for (int b = 0; b < agents; ++b) {
      if (a == b || !rng.coin(density)) continue;
      out_arcs.push_back(static_cast<int>(market.arcs.size()));
      market.arcs.emplace_back(a, b);
    }
    std::vector<double> arc_score;
    if (correlation > 0.0)
      for (auto [from, to] : market.arcs) arc_score.push_back(house_score[to]);
    detail::sample_preferences(
        rng, style, 0.5, out_arcs,
        [&](int x, int y) { market.preferences[a].emplace_back(x, y); },
        &arc_score, correlation);
  }
  return market;
}

}  // namespace popassign

#endif  // POPASSIGN_GENERATOR_HPP_
