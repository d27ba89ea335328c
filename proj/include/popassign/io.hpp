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

// JSON encoding of instances, matchings and housing markets.
//
// Instance:
//   {"agents": ["a1", ...], "objects": ["b1", ...],
//    "edges": [["a1", "b1"], ...],
//    "preferences": {"a1": {"pairs": [["b1", "b2"], ...]},     // b1 > b2
//                    "a2": {"tiers": [["b1"], ["b2", "b3"]]}}}
// Agents missing from "preferences" are indifferent among their neighbors.
//
// Matching: [["a1", "b1"], ...].
//
// Housing market:
//   {"agents": [...], "arcs": [["a1", "a2"], ...],
//    "preferences": {"a1": {"pairs": [[["a1", "a2"], ["a1", "a3"]], ...]}}}
// where an arc (a1, a2) means a1 accepts a2's house and each pair ranks the
// first arc above the second.

#ifndef POPASSIGN_IO_HPP_
#define POPASSIGN_IO_HPP_

#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "popassign/instance.hpp"
#include "popassign/matching.hpp"
#include "popassign/reductions.hpp"

namespace popassign {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

inline const Json& require_field(const Json& doc, const char* key,
                                 Json::value_t type) {
  if (!doc.is_object()) throw InputError("document is not a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw InputError(std::string("missing field '") + key + "'");
  if (it->type() != type)
    throw InputError(std::string("field '") + key + "' has the wrong type");
  return *it;
}

inline std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

inline std::pair<std::string, std::string> as_string_pair(const Json& j,
                                                          const char* what) {
  if (!j.is_array() || j.size() != 2)
    throw InputError(std::string(what) + " must be a two-element array");
  return {as_string(j[0], what), as_string(j[1], what)};
}

// First index of each name; later duplicates are left to validation.
inline std::unordered_map<std::string, int> index_names(
    const std::vector<std::string>& names) {
  std::unordered_map<std::string, int> out;
  for (int i = 0; i < static_cast<int>(names.size()); ++i)
    out.emplace(names[i], i);
  return out;
}

}  // namespace detail

// Draft plus the name-resolution problems found while reading it. Unknown
// names are reported and their entries skipped.
struct ParsedDraft {
  InstanceDraft draft;
  ValidationReport report;
};

inline ParsedDraft parse_instance_draft(std::string_view text) {
  using Kind = Violation::Kind;
  const Json doc = detail::parse_json(text);
  ParsedDraft out;
  for (const Json& a : detail::require_field(doc, "agents", Json::value_t::array))
    out.draft.add_agent(detail::as_string(a, "agent identifier"));
  for (const Json& b : detail::require_field(doc, "objects", Json::value_t::array))
    out.draft.add_object(detail::as_string(b, "object identifier"));
  const auto agents = detail::index_names(out.draft.agents());
  const auto objects = detail::index_names(out.draft.objects());
  auto unknown = [&](const std::string& what, const std::string& name) {
    out.report.violations.push_back(
        {Kind::kUnknownIdentifier, "unknown " + what + " '" + name + "'"});
  };
  for (const Json& e : detail::require_field(doc, "edges", Json::value_t::array)) {
    auto [a, b] = detail::as_string_pair(e, "edge");
    auto ia = agents.find(a);
    auto ib = objects.find(b);
    if (ia == agents.end()) unknown("agent", a);
    if (ib == objects.end()) unknown("object", b);
    if (ia != agents.end() && ib != objects.end())
      out.draft.add_edge(ia->second, ib->second);
  }
  auto prefs_it = doc.find("preferences");
  if (prefs_it == doc.end() || prefs_it->is_null()) return out;
  if (!prefs_it->is_object())
    throw InputError("field 'preferences' must be an object");
  auto resolve_object = [&](const Json& j, int& out_index) {
    const std::string name = detail::as_string(j, "preference entry");
    auto it = objects.find(name);
    if (it == objects.end()) {
      unknown("object", name);
      return false;
    }
    out_index = it->second;
    return true;
  };
  for (const auto& [agent_name, spec] : prefs_it->items()) {
    auto ia = agents.find(agent_name);
    if (ia == agents.end()) {
      unknown("agent", agent_name);
      continue;
    }
    const int a = ia->second;
    if (!spec.is_object())
      throw InputError("preferences of '" + agent_name + "' must be an object");
    const bool has_pairs = spec.contains("pairs");
    const bool has_tiers = spec.contains("tiers");
    if (has_pairs == has_tiers)
      throw InputError("preferences of '" + agent_name +
                       "' need exactly one of 'pairs' or 'tiers'");
    if (has_pairs) {
      const Json& pairs = spec["pairs"];
      if (!pairs.is_array())
        throw InputError("'pairs' of '" + agent_name + "' must be an array");
      for (const Json& p : pairs) {
        if (!p.is_array() || p.size() != 2)
          throw InputError("preference pair must be a two-element array");
        int better = 0, worse = 0;
        const bool ok1 = resolve_object(p[0], better);
        const bool ok2 = resolve_object(p[1], worse);
        if (ok1 && ok2) out.draft.prefer(a, better, worse);
      }
    } else {
      const Json& tiers = spec["tiers"];
      if (!tiers.is_array())
        throw InputError("'tiers' of '" + agent_name + "' must be an array");
      std::vector<std::vector<int>> resolved;
      for (const Json& tier : tiers) {
        if (!tier.is_array())
          throw InputError("each tier of '" + agent_name + "' must be an array");
        auto& row = resolved.emplace_back();
        for (const Json& name : tier) {
          int b = 0;
          if (resolve_object(name, b)) row.push_back(b);
        }
      }
      out.draft.prefer_tiers(a, resolved);
    }
  }
  return out;
}

// Parses and validates; throws InputError listing every violation.
inline Instance parse_instance(std::string_view text) {
  ParsedDraft parsed = parse_instance_draft(text);
  ValidationReport report = parsed.report;
  ValidationReport structural = parsed.draft.validate();
  report.violations.insert(report.violations.end(),
                           structural.violations.begin(),
                           structural.violations.end());
  if (!report.ok()) throw InputError("invalid instance: " + report.summary());
  return parsed.draft.build();
}

// Closed pair sets are written out; agents without pairs are omitted.
inline Json instance_to_json(const Instance& inst) {
  Json doc;
  doc["agents"] = inst.agent_names();
  doc["objects"] = inst.object_names();
  Json edges = Json::array();
  for (const Edge& e : inst.edges())
    edges.push_back({inst.agent_name(e.agent), inst.object_name(e.object)});
  doc["edges"] = std::move(edges);
  Json prefs = Json::object();
  for (int a = 0; a < inst.num_agents(); ++a) {
    auto pairs = inst.preference_pairs(a);
    if (pairs.empty()) continue;
    Json list = Json::array();
    for (auto [better, worse] : pairs)
      list.push_back({inst.object_name(better), inst.object_name(worse)});
    prefs[inst.agent_name(a)]["pairs"] = std::move(list);
  }
  doc["preferences"] = std::move(prefs);
  return doc;
}

inline std::string serialize_instance(const Instance& inst) {
  return instance_to_json(inst).dump(2) + "\n";
}

inline Json matching_to_json(const Instance& inst, const Matching& m) {
  Json out = Json::array();
  for (const Edge& e : m.pairs())
    out.push_back({inst.agent_name(e.agent), inst.object_name(e.object)});
  return out;
}

inline std::vector<Edge> pairs_from_json(const Instance& inst, const Json& j) {
  if (!j.is_array()) throw InputError("matching must be a JSON array of pairs");
  std::vector<Edge> pairs;
  for (const Json& p : j) {
    auto [a, b] = detail::as_string_pair(p, "matching pair");
    auto ia = inst.find_agent(a);
    auto ib = inst.find_object(b);
    if (!ia) throw InputError("matching names unknown agent '" + a + "'");
    if (!ib) throw InputError("matching names unknown object '" + b + "'");
    pairs.push_back({*ia, *ib});
  }
  return pairs;
}

inline Matching parse_matching(const Instance& inst, std::string_view text) {
  const auto pairs = pairs_from_json(inst, detail::parse_json(text));
  return matching_from_pairs(inst, pairs);
}

inline HousingMarket parse_market(std::string_view text) {
  const Json doc = detail::parse_json(text);
  HousingMarket market;
  for (const Json& a : detail::require_field(doc, "agents", Json::value_t::array))
    market.agents.push_back(detail::as_string(a, "agent identifier"));
  const auto index = detail::index_names(market.agents);
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw InputError("unknown agent '" + name + "'");
    return it->second;
  };
  std::map<std::pair<int, int>, int> arc_index;
  for (const Json& arc : detail::require_field(doc, "arcs", Json::value_t::array)) {
    auto [from, to] = detail::as_string_pair(arc, "arc");
    const std::pair<int, int> key{lookup(from), lookup(to)};
    arc_index.emplace(key, static_cast<int>(market.arcs.size()));
    market.arcs.push_back(key);
  }
  market.preferences.resize(market.agents.size());
  auto prefs_it = doc.find("preferences");
  if (prefs_it == doc.end() || prefs_it->is_null()) return market;
  if (!prefs_it->is_object())
    throw InputError("field 'preferences' must be an object");
  for (const auto& [name, spec] : prefs_it->items()) {
    const int a = lookup(name);
    if (!spec.is_object() || !spec.contains("pairs") || !spec["pairs"].is_array())
      throw InputError("preferences of '" + name + "' need a 'pairs' array");
    for (const Json& p : spec["pairs"]) {
      if (!p.is_array() || p.size() != 2)
        throw InputError("market preference must be a pair of arcs");
      int ids[2];
      for (int t = 0; t < 2; ++t) {
        auto [from, to] = detail::as_string_pair(p[t], "arc");
        auto it = arc_index.find({lookup(from), lookup(to)});
        if (it == arc_index.end())
          throw InputError("preference of '" + name + "' names unknown arc ('" +
                           from + "', '" + to + "')");
        ids[t] = it->second;
      }
      market.preferences[a].emplace_back(ids[0], ids[1]);
    }
  }
  return market;
}

inline Json market_to_json(const HousingMarket& market) {
  Json doc;
  doc["agents"] = market.agents;
  Json arcs = Json::array();
  for (auto [from, to] : market.arcs)
    arcs.push_back({market.agents[from], market.agents[to]});
  doc["arcs"] = std::move(arcs);
  Json prefs = Json::object();
  for (int a = 0; a < static_cast<int>(market.preferences.size()); ++a) {
    if (market.preferences[a].empty()) continue;
    Json list = Json::array();
    for (auto [x, y] : market.preferences[a]) {
      auto arc = [&](int id) {
        return Json::array({market.agents[market.arcs[id].first],
                            market.agents[market.arcs[id].second]});
      };
      list.push_back(Json::array({arc(x), arc(y)}));
    }
    prefs[market.agents[a]]["pairs"] = std::move(list);
  }
  doc["preferences"] = std::move(prefs);
  return doc;
}

}  // namespace popassign

#endif  // POPASSIGN_IO_HPP_
