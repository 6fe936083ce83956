#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "lie_euler/generators.hpp"
#include "lie_euler/rational_linalg.hpp"
#include "lie_euler/structure.hpp"
#include "lie_euler/tables.hpp"
#include "lie_euler/vector_field.hpp"

using namespace lie_euler;

TEST_CASE("polynomial arithmetic, derivative, substitution") {
  Polynomial x = Polynomial::variable(Base::x);
  Polynomial y = Polynomial::variable(Base::y);
  Polynomial f = (x + y).pow(2);

  CHECK(f.derivative(Base::x) == Rational(2) * (x + y));
  CHECK(f.substituted(var_index(Base::y), -x).is_zero());
  CHECK(f.degree_in(var_index(Base::x)) == 2);

  std::array<double, kNumVars> pt{};
  pt[static_cast<std::size_t>(var_index(Base::x))] = 2;
  pt[static_cast<std::size_t>(var_index(Base::y))] = 3;
  CHECK(f.evaluate(pt) == 25.0);
}

TEST_CASE("rational linear algebra") {
  RatMat a = {{Rational(1), Rational(2)}, {Rational(3), Rational(4)}};
  CHECK(determinant(a) == Rational(-2));

  auto sol = solve(a, {Rational(5), Rational(11)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == Rational(1));
  CHECK((*sol)[1] == Rational(2));

  RatMat singular = {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  CHECK(rank(singular) == 1);
  CHECK(nullspace(singular).size() == 1);
  CHECK(!solve(singular, {Rational(0), Rational(1)}).has_value());

  std::vector<RatVec> basis = {{Rational(1), Rational(0), Rational(1)},
                               {Rational(0), Rational(1), Rational(1)}};
  CHECK(in_span(basis, {Rational(2), Rational(3), Rational(5)}));
  CHECK(!in_span(basis, {Rational(0), Rational(0), Rational(1)}));
}

TEST_CASE("lie bracket of coordinate fields") {
  VectorField d_x;
  d_x.component(Base::x) = Polynomial::constant(1);
  VectorField euler_op;  // x d_x
  euler_op.component(Base::x) = Polynomial::variable(Base::x);

  CHECK(bracket(d_x, euler_op) == d_x);
  CHECK(bracket(d_x, d_x).is_zero());
}

TEST_CASE("computed structure constants match the reference tables") {
  const auto& gens = standard_generators();
  StructureConstants sc = structure_constants_from_fields(gens);
  const StructureConstants& ref = reference_algebra_table();
  for (int i = 0; i < 13; ++i)
    for (int j = 0; j < 13; ++j)
      for (int k = 0; k < 13; ++k) CHECK(sc.c(i, j, k) == ref.c(i, j, k));

  Subalgebra z = center(sc);
  REQUIRE(z.dim() == 1);
  StructureConstants q = quotient(sc, z);
  const StructureConstants& qref = reference_quotient_table();
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j)
      for (int k = 0; k < 12; ++k) CHECK(q.c(i, j, k) == qref.c(i, j, k));
}

TEST_CASE("radical derived series and rotation subalgebra") {
  const StructureConstants& g1 = reference_quotient_table();
  Subalgebra r = Subalgebra::from_indices(g1, std::array<int, 9>{0, 1, 2, 3, 4, 5, 6, 7, 8});
  auto series = derived_series(r);
  REQUIRE(series.size() == 4);
  CHECK(series[0].dim() == 9);
  CHECK(series[1].dim() == 7);
  CHECK(series[2].dim() == 3);
  CHECK(series[3].dim() == 0);
  CHECK(is_solvable(r));

  Subalgebra s3 = Subalgebra::from_indices(g1, std::array<int, 3>{9, 10, 11});
  CHECK(is_closed(s3));
  CHECK(is_negative_definite(killing_form(subalgebra_constants(s3))));
  CHECK(so3_identification(s3).has_value());
}

TEST_CASE("galilean ideal and its counterexample") {
  const StructureConstants& g = reference_algebra_table();
  Subalgebra b = Subalgebra::from_indices(g, std::array<int, 10>{0, 1, 2, 3, 4, 5, 6, 9, 10, 11});
  CHECK(is_ideal(b, Subalgebra::whole(g)));
  CHECK(galilean_check(b).ok);

  // Swapping the time translation for the time dilation breaks the pattern:
  // [X8, X5] scales the boost instead of producing a translation.
  Subalgebra bad = Subalgebra::from_indices(g, std::array<int, 10>{0, 1, 2, 7, 4, 5, 6, 9, 10, 11});
  CHECK(!galilean_check(bad).ok);
}

TEST_CASE("table rendering") {
  const StructureConstants& g = reference_algebra_table();
  std::string md = render_markdown_table(g, x_labels(13));
  CHECK(md.find("X_13") != std::string::npos);
  CHECK(md.find("X_1") != std::string::npos);
  CHECK(render_combination({Rational(1), Rational(-2)}, x_labels(2)).find("X_1") == 0);
}
