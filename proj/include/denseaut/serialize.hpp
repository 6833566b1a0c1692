#pragma once

#include <json.hpp>

#include "denseaut/aut.hpp"
#include "denseaut/oracle.hpp"

namespace denseaut {

using Json = nlohmann::ordered_json;

Json to_json(const ExactScalar& s);
Json to_json(const Vector& v);
Json to_json(const ExactMatrix& m);
Json to_json(const Group& g);
Json to_json(const AutDescriptor& d);
Json to_json(const AutResult& r);
Json to_json(const Certificate& c);
Json to_json(const OracleReport& r);

/// Inverses of the writers above; groups are rebuilt from their "dsl" field.
ExactScalar scalar_from_json(const Json& j);
ExactMatrix matrix_from_json(const Json& j);
Group group_from_json(const Json& j);
AutDescriptor aut_from_json(const Json& j);

}  // namespace denseaut
