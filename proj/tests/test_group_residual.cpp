#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include <nlohmann/json.hpp>

#include "lie_euler/group_action.hpp"
#include "lie_euler/residual.hpp"

using namespace lie_euler;

namespace {
const StatePoint kSample{0.7, 0.3, -0.4, 0.5, 0.2, -0.1, 0.3, 1.2, 1.1};

double max_norm(const ResidualReport& r) {
  double m = 0;
  for (double v : r.max_norm) m = std::max(m, v);
  return m;
}
}  // namespace

TEST_CASE("closed-form point action matches the integrated flow") {
  for (int i : {1, 4, 8, 10, 13}) {
    CAPTURE(i);
    CHECK(flow_check(i, kSample, 0.8) <= 1e-7);
  }
}

TEST_CASE("one-parameter group law and inverse") {
  for (int i = 1; i <= 13; ++i) {
    CAPTURE(i);
    CHECK(group_law_check(i, 0.4, -0.9, kSample) <= 1e-12);
    auto back = apply_point(i, -0.6, apply_point(i, 0.6, kSample)).as_array();
    auto orig = kSample.as_array();
    for (std::size_t k = 0; k < 9; ++k) CHECK(std::abs(back[k] - orig[k]) <= 1e-12);
  }
}

TEST_CASE("exact solutions have residual at roundoff") {
  EulerSystem sys;
  Grid grid = Grid::default_grid();
  CHECK(max_norm(residual(constant_state(), sys, grid)) <= 1e-13);
  CHECK(max_norm(residual(uniform_flow(0.3, -0.2, 0.5, 2.0, 1.5), sys, grid)) <= 1e-13);
  CHECK(max_norm(residual(stratified_state(1.0), sys, grid)) <= 1e-13);
}

TEST_CASE("the quadratic control field is visibly not a solution") {
  EulerSystem sys;
  CHECK(max_norm(residual(control_quadratic(), sys, Grid::default_grid())) > 0.1);
}

TEST_CASE("a boost preserves the stratified solution") {
  EulerSystem sys;
  PreservationResult r = symmetry_preservation(TransformSpec::single(5, 0.2),
                                               stratified_state(1.0), sys, Grid::default_grid());
  CHECK(r.pass);
}

TEST_CASE("residual max norms are bit-identical across thread counts") {
  EulerSystem sys;
  Grid grid = Grid::default_grid();
  setenv("LIE_EULER_THREADS", "1", 1);
  ResidualReport one = residual(control_trig(), sys, grid);
  setenv("LIE_EULER_THREADS", "7", 1);
  ResidualReport many = residual(control_trig(), sys, grid);
  unsetenv("LIE_EULER_THREADS");
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(one.max_norm[k] == many.max_norm[k]);
    CHECK(one.l2_norm[k] == many.l2_norm[k]);
  }
}

TEST_CASE("central scheme converges at order two, one-sided at order one") {
  EulerSystem sys;
  Grid g0 = Grid::default_grid();
  for (auto& h : g0.h) h = 1.0 / 8.0;
  std::vector<Grid> grids = {g0, g0.halved(), g0.halved().halved()};

  ConvergenceResult c2 = convergence_order(control_trig(), sys, grids);
  ConvergenceResult c1 = convergence_order(control_trig(), sys, grids, Scheme::kForward1);
  for (std::size_t k = 0; k < 5; ++k) {
    CAPTURE(k);
    CHECK(!c2.floor_limited[k]);
    CHECK(c2.order[k] == doctest::Approx(2.0).epsilon(0.1));
    CHECK(!c1.floor_limited[k]);
    CHECK(c1.order[k] == doctest::Approx(1.0).epsilon(0.2));
  }
}

TEST_CASE("composite coordinate rotation is orthogonal") {
  Eigen::Matrix3d r = conclusion2_rotation(0.3, -0.7, 1.1, 0.5);
  CHECK((r * r.transpose() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK(r.determinant() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("transform spec json round trip") {
  TransformSpec s = TransformSpec::single(8, 1.5);
  TransformSpec t = TransformSpec::from_json(s.to_json());
  CHECK(t.generator == 8);
  CHECK(t.lambda == 1.5);

  TransformSpec c = TransformSpec::composite_family({1.2, 0.8, 0.3, -0.4, 0.5, 1.1}, 0.25);
  TransformSpec d = TransformSpec::from_json(c.to_json());
  CHECK(d.composite);
  CHECK(d.s == 0.25);
  CHECK(d.c == c.c);
}

TEST_CASE("density floor and domain guards") {
  SolutionField f = constant_state();
  CHECK_THROWS_AS((void)f.sample(0.0, 1e7, 0.0, 0.0), DomainExceeded);

  SolutionField vac = constant_state();
  auto base = vac.eval;
  vac.eval = [base](double t, double x, double y, double z) {
    auto s = base(t, x, y, z);
    s[4] = 1e-12;  // below the density floor
    return s;
  };
  EulerSystem sys;
  CHECK_THROWS_AS((void)residual(vac, sys, Grid::default_grid()), DensityFloor);
}
