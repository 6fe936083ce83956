#pragma once

#include <array>
#include <optional>

#include <Eigen/Dense>

#include "lie_euler/generators.hpp"
#include "lie_euler/structure.hpp"

namespace lie_euler {

using Mat13 = Eigen::Matrix<double, kAlgebraDim, kAlgebraDim>;
using Vec13 = Eigen::Matrix<double, kAlgebraDim, 1>;

/// Structure constants of the 13-dimensional symmetry algebra (cached).
const StructureConstants& euler_algebra();

/// Matrix of Y -> [X_i, Y] in the basis X_1..X_13 (i is 1-indexed).
RatMat ad_matrix(int i);

struct AdjointMatrix {
  Mat13 m;
  int generator_index;  // 1..13
  double parameter;
};

/// Ad(exp(s X_i)) summed from the Lie series until the term norm drops
/// below tol (cap 60 terms); throws std::runtime_error("not converged").
AdjointMatrix adjoint_series(int i, double s, double tol);

/// Closed-form Ad(exp(s X_i)): identity, polynomial in s for the nilpotent
/// generators, exponential diagonal for the dilations, cos/sin blocks for
/// the rotations.
AdjointMatrix adjoint_closed(int i, double s);

/// Exact closed form for the nilpotent generators i in 1..7 (and the
/// identity cases); nullopt when the closed form is not polynomial.
std::optional<RatMat> adjoint_closed_exact(int i, const Rational& s);

/// Product F(s7 X_7) o ... o F(s1 X_1) as a matrix acting on coefficient
/// vectors in the basis X_1..X_13.
Mat13 compose_translation_boost(const std::array<double, 7>& s);
RatMat compose_translation_boost_exact(const std::array<Rational, 7>& s);

}  // namespace lie_euler
