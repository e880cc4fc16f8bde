// json_io.hpp
//
// JSON views of the library types. Rationals are strings "p/q" or "p".

#pragma once

#include <json.hpp>

#include "sphunit/intertwine.hpp"
#include "sphunit/levi_eo.hpp"
#include "sphunit/orbits.hpp"
#include "sphunit/parameter.hpp"
#include "sphunit/symbols.hpp"
#include "sphunit/tableaux.hpp"
#include "sphunit/unitarity.hpp"

namespace sphunit::io {

using json = nlohmann::ordered_json;

json to_json(const Rational& r);
json to_json(const Vec& v);
json to_json(const Parameter& p);
json to_json(const OrbitPartition& o);
json to_json(const StringRecord& s);
json to_json(const StringDecomposition& d);
json to_json(const Levi& l);
json to_json(const InducedData& d);
json to_json(const FactorNu& f);
json to_json(const Verdict& v);
json to_json(const SignatureReport& r, GroupType g);
json to_json(const SignedTableau& t);
json to_json(const Bipartition& b);
json to_json(const Symbol& s);
json to_json(const Labeling& l);

json error_json(const std::string& code, const std::string& message);

// Inverse direction for the types a caller may feed back in.
Rational rational_from_json(const json& j);
Parameter parameter_from_json(const json& j);
OrbitPartition orbit_from_json(const json& j);
SignedTableau tableau_from_json(const json& j);

}  // namespace sphunit::io
