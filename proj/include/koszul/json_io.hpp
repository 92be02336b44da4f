#pragma once

// JSON encodings of the library's value types. Parsing throws schema_error on
// any shape violation; serialization is deterministic (objects sort their
// keys, arrays are emitted in canonical order).

#include <string>

#include "json.hpp"
#include "koszul/comodule.hpp"
#include "koszul/milnor.hpp"
#include "koszul/tate.hpp"

namespace koszul {

nlohmann::json load_json_file(const std::string& path);  // file_error / schema_error

// {"dim": d, "generators": [...], "relations": [[[i,j], ...], ...]}
QuadraticPresentation presentation_from_json(const nlohmann::json& j);
nlohmann::json to_json(const QuadraticPresentation& q);

// {"entries": [{"i":.., "j":.., "dim":..}, ...]} sorted by (j, i), zeros absent
nlohmann::json to_json(const TorTable& t);
TorTable tor_table_from_json(const nlohmann::json& j);

// {"d": optional, "source": optional, "entries": [{"l":.., "w":.., "dim":..}, ...]}
HomTable hom_table_from_json(const nlohmann::json& j);
nlohmann::json to_json(const HomTable& t);

// {"coalgebra": {"kind": "tensor"|"divided"|"quadratic", ...},
//  "basis": [{"label":.., "weight":..}, ...],
//  "coaction": [{"from":.., "to":.., "word": [...]}, ...]}
GradedComodule comodule_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GradedComodule& m);

// {"classes": [...], "steinberg": [[i, j], ...]}
ExplicitFieldSpec explicit_field_from_json(const nlohmann::json& j);

}  // namespace koszul
