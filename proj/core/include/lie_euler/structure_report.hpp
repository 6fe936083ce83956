#pragma once

#include <nlohmann/json.hpp>

#include "lie_euler/structure.hpp"

namespace lie_euler {

/// Full structure analysis of the 13-dimensional symmetry algebra and its
/// quotient by the center: center dimension, radical derived series, derived
/// subalgebra facts, Levi decomposition certificate, rotation so(3)
/// identification, Galilean ideal, and the abelian scaling complement. All
/// checks run in exact rational arithmetic; the report is deterministic.
nlohmann::ordered_json structure_report();

/// True when every check in the report passed.
bool structure_report_passed(const nlohmann::ordered_json& report);

}  // namespace lie_euler
