#pragma once

#include "nilblob/alcove.hpp"
#include "nilblob/presentation.hpp"

#include <json.hpp>

namespace nb {

using json = nlohmann::json;

json to_json(const BlobDiagram& d);
BlobDiagram diagram_from_json(const json& j);

// zero serializes as an empty array; the reader then needs n
json to_json(const Element& x);
Element element_from_json(const json& j, int n = 0);

json to_json(const ExtElement& x);
ExtElement ext_from_json(const json& j, int n = 0);

json to_json(const BlobParams& p);
BlobParams params_from_json(const json& j);

json to_json(const PathTableau& t);  // height list
PathTableau tableau_from_json(const json& j);

json to_json(const StdMap& orbit);
StdMap orbit_from_json(const json& j);

json to_json(const TruncatedWord& w);
TruncatedWord truncated_from_json(const json& j);

json to_json(const CodMatrix& c);
CodMatrix codmatrix_from_json(const json& j);

json to_json(const NormalForm& f, int n);
json to_json(const Factorization& f);
json to_json(const RegionFactorization& f);

}  // namespace nb
