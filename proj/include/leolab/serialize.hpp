#pragma once

// JSON and CSV views of operators. The JSON schema is
// {"dim": n, "label": ..., "re": [[..]], "im": [[..]]}
// (docs/schemas/operator.schema.json); CSV is row-major with one re,im column
// pair per entry.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "leolab/operator.hpp"

namespace leolab {

nlohmann::json operator_to_json(const Operator& op);
Operator operator_from_json(const nlohmann::json& j);

void operator_to_csv(const Operator& op, std::ostream& out);

// %.15g, the project-wide float-printing convention.
std::string format_float(double v);

}  // namespace leolab
