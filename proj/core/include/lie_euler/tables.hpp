#pragma once

#include "lie_euler/structure.hpp"

namespace lie_euler {

/// Reference 13x13 commutator table of the symmetry algebra, transcribed
/// entry by entry as an independent regression oracle.
const StructureConstants& reference_algebra_table();

/// Reference 12x12 table of the quotient by the center.
const StructureConstants& reference_quotient_table();

}  // namespace lie_euler
