#pragma once

#include <string>

#include <json.hpp>

#include "koszul/constructors.hpp"
#include "koszul/koszul_class.hpp"
#include "koszul/models.hpp"

namespace koszul {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings; wedge indices as sorted integer arrays.
Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);

CurveModel model_from_json(const Json& j);
CurveModel load_model(const std::string& path);

Json class_to_json(const KoszulClass& c);
KoszulClass class_from_json(const Json& j);
KoszulClass load_class(const std::string& path);

Json datum_to_json(const DeterminantDatum& d);
DeterminantDatum datum_from_json(const Json& j);
DeterminantDatum load_datum(const std::string& path);

std::vector<Vec> matrix_from_json(const Json& j);  // array of rows
std::vector<Vec> load_matrix(const std::string& path);

std::vector<Vec> subspace_from_json(const Json& j);  // array of vectors

Json skew_to_json(const SkewMap& a);

// FNV-1a 64-bit hash of a file's bytes, as fixed-width hex (provenance).
std::string file_hash(const std::string& path);

Json load_json(const std::string& path);

}  // namespace koszul
