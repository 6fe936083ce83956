#pragma once

#include <optional>
#include <vector>

#include "lie_euler/rational.hpp"

namespace lie_euler {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;  // row-major, rectangular

RatMat identity_mat(int n);

/// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rref(RatMat& m);

int rank(RatMat m);

/// Solves A x = b exactly (any consistent solution); nullopt if inconsistent.
std::optional<RatVec> solve(const RatMat& a, const RatVec& b);

/// Basis of the right nullspace of A.
std::vector<RatVec> nullspace(const RatMat& a);

Rational determinant(RatMat m);

RatMat mat_mul(const RatMat& a, const RatMat& b);

/// Row space basis (rref rows with zero rows dropped).
std::vector<RatVec> row_space(RatMat m);

/// True when v lies in the span of the given (row) vectors.
bool in_span(const std::vector<RatVec>& basis, const RatVec& v);

}  // namespace lie_euler
