#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lie_euler/adjoint.hpp"

namespace lie_euler {

/// Coefficient vector a_1..a_13 in the basis X_1..X_13 (slot k-1 holds a_k).
using AlgebraElement = std::array<double, kAlgebraDim>;

struct ClassifyResult {
  int case_id = 0;  // 1..26, 0 = unclassified
  std::vector<std::string> notes;
};

/// First matching case of the 26-case dispatch in its published order;
/// comparisons are exact on the stored doubles. Throws std::invalid_argument
/// on the zero element.
ClassifyResult classify(const AlgebraElement& a);

/// 1-based indices of the coefficients allowed to survive in the canonical
/// representative of a case.
std::vector<int> canonical_mask(int case_id);

struct Move {
  enum class Kind { kAdjoint, kScale };
  Kind kind = Kind::kAdjoint;
  int generator = 0;  // 1..13 for kAdjoint
  double parameter = 0.0;
};

struct NormalizationResult {
  int case_id = 0;
  AlgebraElement representative{};
  std::vector<Move> moves;
  bool mask_reached = false;
  double off_mask_norm = 0.0;  // max |a_k| over k outside the mask
};

/// Drives the element toward the canonical form of its case with a recorded
/// sequence of adjoint moves and one optional final rescale. A result with
/// mask_reached == false is a definite diagnostic, not an error.
NormalizationResult normalize(const AlgebraElement& a, double tol = 1e-9);

/// Applies the recorded moves to a fresh copy of the element.
AlgebraElement replay_moves(const AlgebraElement& a, const std::vector<Move>& moves);

/// Exact-rational normalization for elements whose case needs only
/// translation and boost moves with rational parameters; nullopt when the
/// case needs rotations or an irrational rescale.
std::optional<std::vector<Rational>> normalize_exact(const std::vector<Rational>& a);

}  // namespace lie_euler
