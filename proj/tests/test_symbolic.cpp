#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lie_euler/generators.hpp"

using namespace lie_euler;

TEST_CASE("all thirteen generators satisfy the invariance criterion symbolically") {
  const auto& gens = standard_generators();
  for (int i = 0; i < kAlgebraDim; ++i) {
    CAPTURE(i);
    InvarianceResult r = infinitesimal_invariance(gens[static_cast<std::size_t>(i)]);
    CHECK(r.invariant);
  }
}

TEST_CASE("a perturbed generator fails with a nonzero witness") {
  VectorField x = standard_generators()[7];
  x.component(Base::u) += Polynomial::variable(Base::u);
  InvarianceResult r = infinitesimal_invariance(x);
  CHECK(!r.invariant);
  REQUIRE(r.witness.has_value());
  CHECK(!r.witness->is_zero());
  CHECK(r.failing_equation >= 1);
  CHECK(r.failing_equation <= 5);
}

TEST_CASE("determining equations hold for every basis parameter direction") {
  for (int i = 1; i <= kAlgebraDim; ++i) {
    CAPTURE(i);
    CHECK(verify_determining(GeneratorParameters::unit(i)).empty());
  }
}

TEST_CASE("determining equations reject a corrupted coefficient") {
  GeneratorParameters params = GeneratorParameters::unit(8);
  VectorField x = generator_from_parameters(params);
  x.component(Base::p) += Polynomial::variable(Base::x);
  auto violations = verify_determining(x);
  CHECK(!violations.empty());
}

TEST_CASE("invariance also holds with a pinned adiabatic index") {
  InvarianceResult r = infinitesimal_invariance(standard_generators()[8], Rational(7, 5));
  CHECK(r.invariant);
}
