#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "comod/cl_labeling.hpp"
#include "comod/groups.hpp"
#include "comod/poset.hpp"
#include "comod/topology.hpp"
#include "json.hpp"

namespace comod::io {

using json = nlohmann::ordered_json;

/// {"n": int, "covers": [[x, y], ...], "labels": [str, ...]?}
inline Poset poset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_unsigned())
    throw BadParams("poset JSON needs a nonnegative integer field \"n\"");
  const std::size_t n = j.at("n").get<std::size_t>();
  if (n < 1) throw BadParams("poset needs at least one element");
  std::vector<Cover> covers;
  if (j.contains("covers")) {
    for (const auto& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_number_unsigned() || !c[1].is_number_unsigned())
        throw BadParams("each cover must be a pair of element ids");
      covers.emplace_back(c[0].get<Id>(), c[1].get<Id>());
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    labels = j.at("labels").get<std::vector<std::string>>();
    if (labels.size() != n) throw BadParams("labels must have one entry per element");
  }
  return Poset::from_covers(n, std::span<const Cover>(covers), std::move(labels));
}

inline json poset_to_json(const Poset& p) {
  json j;
  j["n"] = p.size();
  json covers = json::array();
  for (auto [x, y] : p.cover_relations()) covers.push_back({x, y});
  j["covers"] = std::move(covers);
  json labels = json::array();
  for (Id x = 0; x < p.size(); ++x) labels.push_back(p.label(x));
  j["labels"] = std::move(labels);
  return j;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadParams("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw BadParams(path + ": " + e.what());
  }
}

inline Poset read_poset(const std::string& path) {
  try {
    return poset_from_json(read_json_file(path));
  } catch (const json::exception& e) {
    throw BadParams(path + ": " + e.what());
  }
}

/// Hasse diagram; every edge points from the lower to the higher element.
inline std::string to_dot(const Poset& p, const std::string& name = "hasse") {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (Id x = 0; x < p.size(); ++x) out << "  " << x << " [label=" << json(p.label(x)).dump() << "];\n";
  for (auto [x, y] : p.cover_relations()) out << "  " << x << " -> " << y << ";\n";
  out << "}\n";
  return out.str();
}

inline json chain_to_json(const LabeledChain& c) {
  return {{"chain", c.chain}, {"word", c.word}, {"decreasing", c.decreasing()}};
}

inline json chains_to_json(const std::vector<LabeledChain>& chains) {
  json j = json::array();
  for (const auto& c : chains) j.push_back(chain_to_json(c));
  return j;
}

inline std::vector<std::size_t> f_vector(const SimplicialComplex& k) {
  std::set<std::vector<Id>> faces;
  for (const auto& f : k.facets) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << f.size()); ++mask) {
      std::vector<Id> face;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (mask >> i & 1) face.push_back(f[i]);
      faces.insert(std::move(face));
    }
  }
  std::vector<std::size_t> fv;
  for (const auto& f : faces) {
    if (fv.size() < f.size()) fv.resize(f.size(), 0);
    ++fv[f.size() - 1];
  }
  return fv;
}

inline json complex_to_json(const SimplicialComplex& k, bool with_f_vector = false) {
  json j{{"vertices", k.vertices}, {"facets", k.facets}};
  if (with_f_vector) j["f_vector"] = f_vector(k);
  return j;
}

/// {"perm_generators": [[[1,2]], [[1,2,3]]]} or {"table": [[...], ...]}.
inline Group group_from_json(const json& j) {
  try {
    if (j.contains("perm_generators")) {
      std::vector<CycleNotation> gens = j.at("perm_generators").get<std::vector<CycleNotation>>();
      return group_from_cycles(gens);
    }
    if (j.contains("table")) return Group::from_table(j.at("table").get<std::vector<std::vector<Id>>>());
  } catch (const json::exception& e) {
    throw BadParams(std::string("group JSON: ") + e.what());
  }
  throw BadParams("group JSON needs \"perm_generators\" or \"table\"");
}

inline json subgroup_to_json(const Subgroup& h) { return h.elements(); }

}  // namespace comod::io
