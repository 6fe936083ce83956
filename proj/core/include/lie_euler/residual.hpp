#pragma once

#include <array>
#include <utility>
#include <vector>

#include "lie_euler/group_action.hpp"

namespace lie_euler {

struct Grid {
  std::array<std::pair<double, double>, 4> box{};  // t,x,y,z bounds
  std::array<double, 4> h{};

  /// 17 points per axis on [0,1]^4, h = 1/16.
  static Grid default_grid();
  /// Same box with every spacing halved.
  Grid halved() const;

  std::array<int, 4> points() const;
  /// Throws std::invalid_argument unless every axis has >= 3 points and
  /// positive spacing.
  void validate() const;
};

enum class Scheme {
  kCentral2,  // second-order central differences
  kForward1,  // first-order one-sided (test fixture)
};

struct ResidualReport {
  std::array<double, 5> max_norm{};
  std::array<double, 5> l2_norm{};
  long sample_count = 0;
  double min_density_seen = 0.0;
};

inline constexpr double kDensityFloor = 1e-8;

/// Finite-difference residuals of the five equations at interior grid points;
/// the 1/q momentum terms are evaluated directly. Throws DensityFloor when
/// the density dips below kDensityFloor and propagates DomainExceeded.
/// Honors the LIE_EULER_THREADS cap; max norms are bit-identical across
/// thread counts.
ResidualReport residual(const SolutionField& f, const EulerSystem& system, const Grid& grid,
                        Scheme scheme = Scheme::kCentral2);

struct PreservationResult {
  ResidualReport before;
  ResidualReport after;
  bool pass = false;
};

/// Pass criterion: max over equations of after.max_norm is at most
/// 10 x max(before max, floor).
PreservationResult symmetry_preservation(const TransformSpec& spec, const SolutionField& f,
                                         const EulerSystem& system, const Grid& grid,
                                         double floor = 1e-12);

struct ConvergenceResult {
  std::array<double, 5> order{};       // least-squares slope per equation
  std::array<bool, 5> floor_limited{};  // residual differences at roundoff
};

/// Per-equation order of the discretization error over a halving grid
/// sequence (>= 3 grids): slope of log(max deviation from the analytic
/// residual) against log(h). Fields without an analytic residual closure are
/// treated as exact (deviation = raw residual).
ConvergenceResult convergence_order(const SolutionField& f, const EulerSystem& system,
                                    const std::vector<Grid>& grids,
                                    Scheme scheme = Scheme::kCentral2);

}  // namespace lie_euler
