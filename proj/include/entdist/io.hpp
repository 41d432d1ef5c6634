#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "entdist/measures.hpp"

namespace entdist {

// {"dims": [...], "re": [...], "im": [...]}; matrices row-major.
nlohmann::json to_json(const PureState& psi);
nlohmann::json to_json(const DensityMatrix& rho);
nlohmann::json to_json(const ProtocolRecord& rec);

PureState pure_state_from_json(const nlohmann::json& j);
DensityMatrix density_matrix_from_json(const nlohmann::json& j);

// Parses "1,4,5:2:3" (1-based qubit labels, the paper's notation) into a
// Grouping with 0-based indices.
Grouping parse_grouping(const std::string& text);

} // namespace entdist
