#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lie_euler/vector_field.hpp"

namespace lie_euler {

inline constexpr int kAlgebraDim = 13;

/// The 13 symmetry generators X_1..X_13 of the gas-dynamics Euler system
/// (0-indexed: result[0] is X_1).
const std::array<VectorField, kAlgebraDim>& standard_generators();

/// Parameters (a_1..a_13) of the general symmetry generator.
struct GeneratorParameters {
  std::array<Rational, kAlgebraDim> a{};

  static GeneratorParameters unit(int i) {  // 1-indexed
    GeneratorParameters p;
    p.a[static_cast<std::size_t>(i - 1)] = 1;
    return p;
  }
};

/// Builds the general symmetry generator from its 13 parameters.
VectorField generator_from_parameters(const GeneratorParameters& params);

/// Correspondence between parameter a_i and the signed standard generator it
/// multiplies: pair (generator index 1..13, sign).
std::array<std::pair<int, int>, kAlgebraDim> parameter_basis_correspondence();

/// The Euler system; gamma is the adiabatic index.
struct EulerSystem {
  double gamma = 1.4;
  bool warn_unphysical() const { return gamma <= 1.0; }
};

/// The five residual polynomials over base + jet variables, each multiplied
/// through by q to clear the 1/q momentum denominators. Gamma is carried as
/// the symbolic variable kGammaVar; substitute a rational to pin it.
struct SymbolicResidual {
  std::array<Polynomial, kNumDependent> equations;
};

/// Residual with gamma symbolic.
SymbolicResidual symbolic_residual();
/// Residual with gamma pinned to a rational value.
SymbolicResidual symbolic_residual(const Rational& gamma);

/// One violated determining equation: its name plus the nonzero remainder.
struct DeterminingViolation {
  std::string equation;
  std::string remainder;
};

/// Checks the determining equations against the coefficient functions built
/// from the given parameters. Empty result means all equations hold.
std::vector<DeterminingViolation> verify_determining(const GeneratorParameters& params);

/// Same check for arbitrary coefficient polynomials (components of X indexed
/// by base coordinate), used to exercise detection of corrupted ansatz terms.
std::vector<DeterminingViolation> verify_determining(const VectorField& x);

/// Result of the infinitesimal invariance criterion. On failure, witness
/// holds the first nonzero reduced polynomial.
struct InvarianceResult {
  bool invariant = false;
  int failing_equation = -1;  // 1..5 when invariant is false
  std::optional<Polynomial> witness;
};

/// Applies prolong1(x) to each residual equation and reduces modulo the
/// system by eliminating the time-derivative jet variables (clearing q
/// denominators). Gamma stays symbolic, so invariance certified here holds
/// for every adiabatic index at once.
InvarianceResult infinitesimal_invariance(const VectorField& x);
InvarianceResult infinitesimal_invariance(const VectorField& x, const Rational& gamma);

}  // namespace lie_euler
