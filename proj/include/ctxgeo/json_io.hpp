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

#ifndef CTXGEO_JSON_IO_HPP
#define CTXGEO_JSON_IO_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "ctxgeo/analysis.hpp"
#include "ctxgeo/geometry.hpp"
#include "json.hpp"

namespace ctxgeo {

using Json = nlohmann::ordered_json;

class JsonFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Geometry: {"points": m, "contexts": [[...], ...]} with 1-based point ids.
Json geometry_to_json(const TwoContextGeometry& g);
/// Structural parse only; validation is left to validate()/TwoContextGeometry::make.
GeometryData geometry_from_json(const Json& j);

/// Adds "name", "labeling" and "provenance" to the geometry object.
Json catalog_entry_to_json(const CatalogEntry& e);

/// Accepts {"labeling": {...}} or a bare {"<point>": "<observable>"} object.
std::map<int, std::string> labeling_strings_from_json(const Json& j);
Json labeling_to_json(const Labeling& lab);

Json matrix_to_json(const ConfigurationMatrix& m);
Json report_to_json(const VerificationReport& r);
Json verdict_to_json(const ParityVerdict& v);

std::string to_hex(const std::string& bytes);

/// Reads and parses a JSON file; throws JsonFormatError with the path on failure.
Json read_json_file(const std::string& path);

}  // namespace ctxgeo

#endif  // CTXGEO_JSON_IO_HPP
