// Copyright 2026 The qmlstt Authors
//
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

#include "qmlstt/model_json.hpp"

#include "qmlstt/error.hpp"

namespace qml {

using nlohmann::ordered_json;

namespace {

ordered_json pairs(RelBits r, int n) {
  ordered_json out = ordered_json::array();
  for (int w = 0; w < n; ++w) {
    for (int v = 0; v < n; ++v) {
      if (has_edge(r, n, w, v)) out.push_back({w, v});
    }
  }
  return out;
}

ordered_json world_list(WorldSet s, int n) {
  ordered_json out = ordered_json::array();
  for (int w = 0; w < n; ++w) {
    if ((s >> w) & 1U) out.push_back(w);
  }
  return out;
}

int checked_world(const ordered_json& j, int n) {
  const int w = j.get<int>();
  if (w < 0 || w >= n) throw Error("world index out of range in model JSON");
  return w;
}

RelBits read_pairs(const ordered_json& j, int n) {
  RelBits r = 0;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw Error("relation pairs must be [from, to]");
    r = add_edge(r, n, checked_world(p[0], n), checked_world(p[1], n));
  }
  return r;
}

WorldSet read_worlds(const ordered_json& j, int n) {
  WorldSet s = 0;
  for (const auto& w : j) s |= WorldSet{1} << checked_world(w, n);
  return s;
}

}  // namespace

ordered_json model_to_json(const KripkeModel& m, int witness_world) {
  const int n = m.worlds();
  ordered_json j;
  j["worlds"] = n;
  j["domain"] = m.domain();
  ordered_json rels = ordered_json::object();
  for (const auto& [name, r] : m.relations) rels[name] = pairs(r, n);
  j["relations"] = rels;
  ordered_json funs = ordered_json::object();
  for (const auto& [name, table] : m.relfuns) {
    ordered_json rows = ordered_json::array();
    for (const auto& [arg, val] : table) {
      ordered_json row;
      row["argument"] = pairs(arg, n);
      row["value"] = pairs(val, n);
      rows.push_back(row);
    }
    funs[name] = rows;
  }
  j["relation_functions"] = funs;
  ordered_json props = ordered_json::object();
  for (const auto& [name, s] : m.props) props[name] = world_list(s, n);
  j["propositions"] = props;
  ordered_json preds = ordered_json::object();
  for (const auto& [name, p] : m.preds) {
    ordered_json rows = ordered_json::array();
    for (std::size_t t = 0; t < p.extension.size(); ++t) {
      // Decode the tuple index, first argument most significant.
      std::vector<int> args(static_cast<std::size_t>(p.arity));
      std::size_t rest = t;
      for (int i = p.arity - 1; i >= 0; --i) {
        args[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(m.domain()));
        rest /= static_cast<std::size_t>(m.domain());
      }
      ordered_json row;
      row["args"] = args;
      row["worlds"] = world_list(p.extension[t], n);
      rows.push_back(row);
    }
    ordered_json entry;
    entry["arity"] = p.arity;
    entry["extension"] = rows;
    preds[name] = entry;
  }
  j["predicates"] = preds;
  ordered_json inds = ordered_json::object();
  for (const auto& [name, x] : m.individuals) inds[name] = x;
  j["individual_constants"] = inds;
  if (witness_world >= 0) {
    j["witness_world"] = witness_world;
  } else {
    j["witness_world"] = nullptr;
  }
  return j;
}

KripkeModel model_from_json(const ordered_json& j) {
  try {
    KripkeModel m(j.at("worlds").get<int>(), j.at("domain").get<int>());
    const int n = m.worlds();
    for (const auto& [name, r] : j.at("relations").items()) m.relations[name] = read_pairs(r, n);
    if (j.contains("relation_functions")) {
      for (const auto& [name, rows] : j["relation_functions"].items()) {
        auto& table = m.relfuns[name];
        for (const auto& row : rows) {
          table[read_pairs(row.at("argument"), n)] = read_pairs(row.at("value"), n);
        }
      }
    }
    for (const auto& [name, s] : j.at("propositions").items()) m.props[name] = read_worlds(s, n);
    if (j.contains("predicates")) {
      for (const auto& [name, entry] : j["predicates"].items()) {
        KripkeModel::Predicate p;
        p.arity = entry.at("arity").get<int>();
        std::size_t tuples = 1;
        for (int i = 0; i < p.arity; ++i) tuples *= static_cast<std::size_t>(m.domain());
        p.extension.assign(tuples, 0);
        for (const auto& row : entry.at("extension")) {
          std::size_t idx = 0;
          for (const auto& a : row.at("args")) {
            const int x = a.get<int>();
            if (x < 0 || x >= m.domain()) throw Error("individual out of range in model JSON");
            idx = idx * static_cast<std::size_t>(m.domain()) + static_cast<std::size_t>(x);
          }
          if (idx >= tuples) throw Error("predicate tuple out of range in model JSON");
          p.extension[idx] = read_worlds(row.at("worlds"), n);
        }
        m.preds[name] = std::move(p);
      }
    }
    if (j.contains("individual_constants")) {
      for (const auto& [name, x] : j["individual_constants"].items()) {
        const int v = x.get<int>();
        if (v < 0 || v >= m.domain()) throw Error("individual out of range in model JSON");
        m.individuals[name] = v;
      }
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed model JSON: ") + e.what());
  }
}

}  // namespace qml
