#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

#include "lie_euler/generators.hpp"

namespace lie_euler {

struct StatePoint {
  double t = 0, x = 0, y = 0, z = 0;
  double u = 0, v = 0, w = 0;
  double p = 0, q = 0;

  std::array<double, 9> as_array() const { return {t, x, y, z, u, v, w, p, q}; }
  static StatePoint from_array(const std::array<double, 9>& a) {
    return {a[0], a[1], a[2], a[3], a[4], a[5], a[6], a[7], a[8]};
  }
};

/// Closed-form action of the one-parameter group generated by X_i (1-indexed).
StatePoint apply_point(int i, double s, const StatePoint& pt);

/// Max deviation between apply_point and a 4th-order Runge-Kutta integration
/// of d(state)/ds = X_i(state) with the given step.
double flow_check(int i, const StatePoint& pt, double s, double step = 1e-3);

/// |g_i(s1) g_i(s2) pt - g_i(s1+s2) pt|_inf.
double group_law_check(int i, double s1, double s2, const StatePoint& pt);

struct DomainExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DensityFloor : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Analytic field (u,v,w,p,q) on an axis-aligned box. Evaluators are pure.
/// analytic_residual, when set, returns the five exact equation residuals at
/// a point for a given gamma (zero functions for exact solutions).
struct SolutionField {
  using Evaluator = std::function<std::array<double, 5>(double, double, double, double)>;
  using ResidualFn = std::function<std::array<double, 5>(double, double, double, double, double)>;

  Evaluator eval;
  std::array<std::pair<double, double>, 4> domain{};  // t,x,y,z bounds
  std::string name;
  ResidualFn analytic_residual;  // may be empty

  /// Evaluates with a domain check; throws DomainExceeded outside the box.
  std::array<double, 5> sample(double t, double x, double y, double z) const;
};

/// One transformation: a single generator (parameter s for i in 1..7,10..12,
/// scale lambda != 0 for i in 8,9,13) or the six-constant composite family.
struct TransformSpec {
  bool composite = false;
  int generator = 0;
  double s = 0.0;
  double lambda = 1.0;
  std::array<double, 6> c{1, 1, 0, 0, 0, 1};

  static TransformSpec single(int i, double parameter);
  static TransformSpec composite_family(const std::array<double, 6>& c, double s);
  static TransformSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

/// Pullback of a solution field under one group element. The composite family
/// is realized as the composition of the six single-generator pullbacks
/// (time scale c1^s, space scale c2^s, rotations by c3 s, c4 s, c5 s, state
/// scale c6^-s); its coordinate map reproduces the published composite
/// formulas, whose velocity matrix must be the transpose of the coordinate
/// rotation for the transform to preserve solutions.
SolutionField transform_solution(const TransformSpec& spec, const SolutionField& f);

/// Coordinate rotation of the composite family with the c2^s factor removed:
/// the matrix applied to (x,y,z) before sampling.
Eigen::Matrix3d conclusion2_rotation(double c3, double c4, double c5, double s);

// Built-in fields (analytic closures on a large box).
SolutionField constant_state();
SolutionField uniform_flow(double u0, double v0, double w0, double p0, double q0);
/// Stationary state with q(x) = 1 + x^2/10 and constant pressure; exact.
SolutionField stratified_state(double p0);
/// Non-solution control: u = x^2, rest constant (O(1) residual, polynomial).
SolutionField control_quadratic();
/// Non-solution control with smooth trigonometric fields and an analytic
/// residual closure; every equation carries nonzero discretization error.
SolutionField control_trig();

}  // namespace lie_euler
