#pragma once

#include <json.hpp>

#include "slodowy/exact/matrix.hpp"

namespace slodowy::exact {

using nlohmann::json;

json to_json(const MPoly& p);
MPoly mpoly_from_json(const json& j);
json to_json(const ScalarMatrix& m);
ScalarMatrix matrix_from_json(const json& j);
Scalar scalar_from_string(const std::string& s);

}  // namespace slodowy::exact
