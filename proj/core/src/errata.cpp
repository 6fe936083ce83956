#include "lie_euler/errata.hpp"

#include <nlohmann/json.hpp>

namespace lie_euler {

const std::vector<Erratum>& errata() {
  static const std::vector<Erratum> entries = {
      {"generator-x9-density",
       "generator list, X9",
       "x dx + y dy + z dz + u du + v dv + w dw - 2r dr",
       "trailing term -2q dq (density variable)",
       "no variable r exists; with -2q dq the span closes under brackets and X9 passes the "
       "infinitesimal invariance check"},
      {"general-coefficient-eta2",
       "general symmetry coefficients, eta2",
       "a4 w term in the y-velocity coefficient",
       "a9 w",
       "a4 w fails the determining equations; a9 w makes the parameterized generator match the "
       "span of X1..X13"},
      {"general-coefficient-pq-swap",
       "general symmetry coefficients, eta4/eta5",
       "pressure coefficient (2a1 - 2a4 + a13) p and density coefficient a13 q",
       "pressure coefficient a13 p and density coefficient (2a1 - 2a4 + a13) q",
       "as printed the invariance criterion fails; swapped, all 13 generators are recovered and "
       "the criterion holds with symbolic gamma"},
      {"general-coefficient-eta1-sign",
       "general symmetry coefficients, eta1",
       "-a6 w term in the x-velocity coefficient",
       "+a6 w",
       "the a6 direction is the negative of the x/z rotation generator, whose u-coefficient is "
       "+w; the printed sign fails the determining equations"},
      {"system-vwz",
       "jet-space system, second momentum equation",
       "v_t + u v_x + v v_y + v w_z + p_y/q",
       "advection term w v_z",
       "the advecting field multiplies the v-derivative in every sibling equation"},
      {"derived-subalgebra-span",
       "quotient-structure discussion, first derived subalgebra",
       "Span{Y1, ..., Y10}",
       "Span{Y1..Y7, Y10, Y11, Y12}",
       "Y8, Y9 never occur as bracket values in the 12x12 table while Y11, Y12 do; the dimension "
       "(10) is unaffected"},
      {"derived-idempotency",
       "quotient-structure discussion, second derived subalgebra",
       "[g1', g1'] = g1'",
       "[g1', g1'] drops Y4 (dimension 9) and only the second derived subalgebra is idempotent",
       "the table's sole bracket with a Y4 component is [Y4, Y8], and Y8 lies outside the first "
       "derived subalgebra"},
      {"radical-tower-not-split",
       "quotient-structure discussion, refinement of the derived radical",
       "r' = Span{Y1,Y2,Y3} x| Span{Y4..Y7} with abelian complement",
       "Span{Y1,Y2,Y3} is an abelian ideal of r' with abelian 4-dimensional quotient; the "
       "extension is central and does not split",
       "[Y4, Y5] = Y1 by the table, so Span{Y4..Y7} is not a subalgebra and every lift of a "
       "complement reproduces the same central bracket"},
      {"case4-generator-index",
       "one-dimensional optimal system, item 4",
       "a11 X_i",
       "a11 X11",
       "the matching elimination step leaves exactly the X11 coefficient free"},
      {"case1-guard",
       "optimal-system proof, first branch",
       "hypothesis a8 != 0, a9 != 0, a8 != 2 a9",
       "additional guard a8 != a9",
       "without the guard, first-match dispatch makes the a8 = a9 branches (cases 2..5) "
       "unreachable and their representatives cannot be produced"},
      {"case18-duplicate",
       "optimal-system proof, case 18",
       "two consecutive case-18 paragraphs with hypotheses a6 != 0 alongside a6 = 0",
       "first paragraph implemented; duplicate recorded",
       "the second paragraph is self-contradictory as printed"},
      {"case19-contradiction",
       "optimal-system proof, case 19",
       "hypothesis lists both a6 = 0 and a6 != 0",
       "a6 != 0 clause dropped",
       "with a6 = 0 the companion condition a5 a11 = a6 a12 is automatic and the branch is "
       "consistent"},
      {"lambda-bridge",
       "solution-transform rules for the two scalings",
       "parameter lambda with no stated relation to the group parameter s",
       "lambda = exp(-s) identifies the printed time/space scaling rules with the pushforward "
       "along the parameter-s group element (lambda = exp(s) for the pressure-density scaling)",
       "graph consistency between the point action and the printed solution rules holds under "
       "exactly this identification"},
      {"composite-y-scale",
       "composite transformation, y-coordinate",
       "(c2 s) cos(c3 s) cos(c4 s) . y",
       "c2^s cos(c3 s) cos(c4 s) . y",
       "every sibling coordinate term carries the factor c2^s"},
      {"composite-velocity-matrix",
       "composite transformation, velocity coefficients",
       "velocity matrix printed as the angle-negated coordinate rotation, with two additional "
       "sign/factor slips",
       "velocity matrix = transpose (inverse) of the coordinate rotation",
       "the printed coordinate matrix equals the composition of the three single-rotation "
       "actions; solution preservation forces the velocity factor to invert it, and the residual "
       "harness certifies the implemented form"},
  };
  return entries;
}

nlohmann::json errata_to_json() {
  nlohmann::json arr = nlohmann::json::array();
  for (const Erratum& e : errata()) {
    arr.push_back({{"id", e.id},
                   {"location", e.location},
                   {"printed", e.printed},
                   {"implemented", e.implemented},
                   {"evidence", e.evidence}});
  }
  return arr;
}

std::string errata_to_markdown() {
  std::string out = "| id | location | printed | implemented |\n|---|---|---|---|\n";
  for (const Erratum& e : errata()) {
    out += "| " + e.id + " | " + e.location + " | " + e.printed + " | " + e.implemented + " |\n";
  }
  return out;
}

}  // namespace lie_euler
