// Copyright 2026 The ctxgeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ctxgeo/json_io.hpp"

#include <fstream>

namespace ctxgeo {

Json geometry_to_json(const TwoContextGeometry& g) {
  Json j;
  j["points"] = g.num_points();
  j["contexts"] = g.contexts();
  return j;
}

GeometryData geometry_from_json(const Json& j) {
  if (!j.is_object()) throw JsonFormatError("geometry must be a JSON object");
  if (!j.contains("points") || !j["points"].is_number_integer()) {
    throw JsonFormatError("geometry needs an integer \"points\" field");
  }
  if (!j.contains("contexts") || !j["contexts"].is_array()) {
    throw JsonFormatError("geometry needs a \"contexts\" array");
  }
  GeometryData d;
  d.num_points = j["points"].get<int>();
  for (const auto& c : j["contexts"]) {
    if (!c.is_array()) throw JsonFormatError("each context must be an array of point ids");
    std::vector<int> ctx;
    for (const auto& pt : c) {
      if (!pt.is_number_integer()) throw JsonFormatError("point ids must be integers");
      ctx.push_back(pt.get<int>());
    }
    d.contexts.push_back(std::move(ctx));
  }
  return d;
}

Json catalog_entry_to_json(const CatalogEntry& e) {
  Json j;
  j["name"] = e.name;
  j["points"] = e.geometry.num_points();
  j["contexts"] = e.geometry.contexts();
  if (e.labeling) {
    Json lab = Json::object();
    for (const auto& [pt, s] : *e.labeling) lab[std::to_string(pt)] = s;
    j["labeling"] = lab;
  }
  j["provenance"] = e.provenance;
  return j;
}

std::map<int, std::string> labeling_strings_from_json(const Json& j) {
  const Json& obj = (j.is_object() && j.contains("labeling")) ? j["labeling"] : j;
  if (!obj.is_object()) throw JsonFormatError("labeling must be an object mapping point ids to observables");
  std::map<int, std::string> out;
  for (const auto& [key, value] : obj.items()) {
    std::size_t used = 0;
    int pt = 0;
    try {
      pt = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || key.empty()) throw JsonFormatError("labeling key \"" + key + "\" is not a point id");
    if (!value.is_string()) throw JsonFormatError("label of point " + key + " must be a string");
    out[pt] = value.get<std::string>();
  }
  return out;
}

Json labeling_to_json(const Labeling& lab) {
  Json j = Json::object();
  for (const auto& [pt, op] : lab) j[std::to_string(pt)] = format_observable(op);
  return j;
}

Json matrix_to_json(const ConfigurationMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.size(); ++k) row.push_back(m.at(i, k));
    rows.push_back(row);
  }
  return rows;
}

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["is_contextual"] = r.is_contextual;
  j["negative_count"] = r.negative_count;
  j["per_context_sign"] = r.per_context_sign;
  j["negative_contexts"] = r.negative_contexts();
  j["postulates"] = {
      {"1p_commuting_contexts", r.postulates.commuting_contexts},
      {"2_observables", r.postulates.observables},
      {"3p_two_contexts", r.postulates.two_contexts},
      {"4_identity_products", r.postulates.identity_products},
      {"5_odd_negative", r.postulates.odd_negative},
  };
  j["distinct_labels"] = r.distinct_labels;
  j["failures"] = r.failures;
  return j;
}

Json verdict_to_json(const ParityVerdict& v) {
  Json j;
  j["verdict"] = to_string(v.verdict);
  Json cert;
  if (v.verdict == Verdict::Forced) {
    cert["kind"] = "relations";
    Json rels = Json::array();
    for (const auto& r : v.relations) rels.push_back({{"context", r.context}, {"point", r.point}});
    cert["relations"] = rels;
  } else {
    cert["kind"] = "gram_assignment";
    Json pairs = Json::array();
    for (auto [a, b] : v.anticommuting_pairs) pairs.push_back({a, b});
    cert["anticommuting_pairs"] = pairs;
  }
  j["certificate"] = cert;
  j["num_variables"] = v.num_variables;
  j["constraint_rank"] = v.constraint_rank;
  return j;
}

std::string to_hex(const std::string& bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (unsigned char c : bytes) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 15]);
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonFormatError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw JsonFormatError(path + ": " + e.what());
  }
}

}  // namespace ctxgeo
