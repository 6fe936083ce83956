#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lie_euler/adjoint.hpp"
#include "lie_euler/optimal.hpp"

using namespace lie_euler;

TEST_CASE("lie series agrees with the closed forms") {
  for (int i = 1; i <= 13; ++i) {
    CAPTURE(i);
    for (double s : {-1.0, 0.3, 0.9}) {
      Mat13 a = adjoint_series(i, s, 1e-16).m;
      Mat13 b = adjoint_closed(i, s).m;
      CHECK((a - b).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("central generator gives the identity") {
  CHECK((adjoint_closed(13, 0.7).m - Mat13::Identity()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("exact nilpotent closed form matches the double version") {
  for (int i = 1; i <= 7; ++i) {
    CAPTURE(i);
    auto exact = adjoint_closed_exact(i, Rational(1, 3));
    REQUIRE(exact.has_value());
    Mat13 dbl = adjoint_closed(i, 1.0 / 3.0).m;
    for (int r = 0; r < 13; ++r)
      for (int c = 0; c < 13; ++c)
        CHECK(std::abs(to_double((*exact)[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) -
                       dbl(r, c)) <= 1e-15);
  }
  CHECK(!adjoint_closed_exact(10, Rational(1)).has_value());
}

TEST_CASE("translation-boost composite: time-translation coefficient decouples") {
  // Only s4 nonzero: the new coefficient of the time translation is
  // a4 - s4 a8 and all others with index > 3 are untouched.
  std::array<double, 7> s{};
  s[3] = 0.5;
  Mat13 m = compose_translation_boost(s);
  Vec13 a = Vec13::Zero();
  a(3) = 2.0;  // a4
  a(7) = 3.0;  // a8
  Vec13 out = m * a;
  CHECK(out(3) == doctest::Approx(2.0 - 0.5 * 3.0).epsilon(1e-15));
  CHECK(out(7) == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("exact composite matches the double composite") {
  std::array<Rational, 7> sr{Rational(1, 2), Rational(-1, 3), Rational(0), Rational(1, 4),
                             Rational(2), Rational(-1), Rational(1, 8)};
  std::array<double, 7> sd{};
  for (int k = 0; k < 7; ++k)
    sd[static_cast<std::size_t>(k)] = to_double(sr[static_cast<std::size_t>(k)]);
  RatMat exact = compose_translation_boost_exact(sr);
  Mat13 dbl = compose_translation_boost(sd);
  for (int r = 0; r < 13; ++r)
    for (int c = 0; c < 13; ++c)
      CHECK(std::abs(to_double(exact[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) -
                     dbl(r, c)) <= 1e-12);
}

TEST_CASE("classification dispatch") {
  AlgebraElement a{};
  a[7] = 1;
  a[8] = 3;
  CHECK(classify(a).case_id == 1);

  AlgebraElement b{};
  b[7] = 1;
  b[8] = 1;
  b[9] = 2;
  CHECK(classify(b).case_id == 2);

  AlgebraElement c{};
  c[4] = 1;
  CHECK(classify(c).case_id == 21);

  AlgebraElement d{};
  d[12] = 1;
  CHECK(classify(d).case_id == 24);

  CHECK_THROWS_AS(classify(AlgebraElement{}), std::invalid_argument);
}

TEST_CASE("canonical masks are consistent with the scale pivots") {
  for (int case_id = 1; case_id <= 26; ++case_id) {
    CAPTURE(case_id);
    auto mask = canonical_mask(case_id);
    CHECK(!mask.empty());
    for (int k : mask) {
      CHECK(k >= 1);
      CHECK(k <= 13);
    }
  }
}

TEST_CASE("normalization reaches the mask on translation-boost cases") {
  AlgebraElement a{};
  a[0] = 1.0;  // a1
  a[4] = -0.5; // a5
  a[7] = 2.0;  // a8
  a[8] = 0.5;  // a9
  NormalizationResult r = normalize(a);
  CHECK(r.case_id == 1);
  CHECK(r.mask_reached);
  CHECK(r.off_mask_norm <= 1e-9);

  AlgebraElement replay = replay_moves(a, r.moves);
  for (int k = 0; k < 13; ++k) {
    auto j = static_cast<std::size_t>(k);
    CHECK(std::abs(replay[j] - r.representative[j]) <= 1e-9);
  }
}

TEST_CASE("exact normalization of a dilation plus translation") {
  std::vector<Rational> a(13, Rational(0));
  a[3] = 1;  // X4
  a[0] = 1;  // X1 is removable by a boost move
  auto rep = normalize_exact(a);
  REQUIRE(rep.has_value());
  for (int k = 0; k < 13; ++k) {
    CAPTURE(k);
    CHECK((*rep)[static_cast<std::size_t>(k)] == (k == 3 ? Rational(1) : Rational(0)));
  }
}
