#include "lie_euler/verify.hpp"

#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "lie_euler/adjoint.hpp"
#include "lie_euler/errata.hpp"
#include "lie_euler/generators.hpp"
#include "lie_euler/group_action.hpp"
#include "lie_euler/optimal.hpp"
#include "lie_euler/residual.hpp"
#include "lie_euler/structure.hpp"
#include "lie_euler/tables.hpp"

namespace lie_euler {

namespace {

using Json = nlohmann::ordered_json;

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  double unit() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
  double range(double a, double b) { return a + (b - a) * unit(); }
  int upto(int n) { return static_cast<int>(eng() % static_cast<std::uint64_t>(n)); }
  // Dyadic values k/8, k in [-16,16]: products and sums stay exact in doubles.
  double dyadic() { return static_cast<double>(upto(33) - 16) / 8.0; }
  double dyadic_nz() {
    double sign = (upto(2) == 0) ? 1.0 : -1.0;
    return sign * static_cast<double>(upto(16) + 1) / 8.0;
  }
  Rational small_rational() {
    return Rational(upto(19) - 9, upto(9) + 1);
  }
};

struct Checks {
  Json list = Json::array();
  bool all_pass = true;

  Json& add(const std::string& name, bool pass) {
    Json c;
    c["name"] = name;
    c["pass"] = pass;
    all_pass = all_pass && pass;
    list.push_back(std::move(c));
    return list.back();
  }
};

// ---------------------------------------------------------------- brackets

Json suite_brackets(const VerifyConfig&) {
  Checks ch;
  const StructureConstants& computed = euler_algebra();
  const StructureConstants& ref = reference_algebra_table();

  {
    int mismatches = 0;
    for (int i = 0; i < 13; ++i)
      for (int j = 0; j < 13; ++j)
        for (int k = 0; k < 13; ++k)
          if (computed.c(i, j, k) != ref.c(i, j, k)) ++mismatches;
    auto& c = ch.add("commutator-table-13", mismatches == 0);
    c["entries"] = 169;
    c["mismatches"] = mismatches;
  }
  {
    int violations = 0, triples = 0;
    for (int i = 0; i < 13; ++i)
      for (int j = i + 1; j < 13; ++j)
        for (int k = j + 1; k < 13; ++k) {
          ++triples;
          RatVec ei(13, Rational(0)), ej(13, Rational(0)), ek(13, Rational(0));
          ei[static_cast<std::size_t>(i)] = 1;
          ej[static_cast<std::size_t>(j)] = 1;
          ek[static_cast<std::size_t>(k)] = 1;
          RatVec s = computed.bracket(ei, computed.bracket(ej, ek));
          RatVec t = computed.bracket(ej, computed.bracket(ek, ei));
          RatVec u = computed.bracket(ek, computed.bracket(ei, ej));
          for (std::size_t m = 0; m < 13; ++m)
            if (s[m] + t[m] + u[m] != 0) {
              ++violations;
              break;
            }
        }
    auto& c = ch.add("jacobi-identity", violations == 0);
    c["triples"] = triples;
    c["violations"] = violations;
  }
  {
    Subalgebra z = center(computed);
    bool center_ok = z.dim() == 1 && z.basis.size() == 1;
    if (center_ok) {
      for (std::size_t m = 0; m < 13; ++m) {
        Rational expect = (m == 12) ? z.basis[0][12] : Rational(0);
        if (z.basis[0][m] != expect || (m == 12 && z.basis[0][m] == 0)) center_ok = false;
      }
    }
    ch.add("center-is-pressure-density-scaling", center_ok)["dim"] = z.dim();

    int mismatches = 0;
    bool reps_ok = false;
    if (center_ok) {
      std::vector<int> reps;
      StructureConstants q = quotient(computed, z, &reps);
      reps_ok = reps.size() == 12;
      for (std::size_t m = 0; m < reps.size() && reps_ok; ++m)
        if (reps[m] != static_cast<int>(m)) reps_ok = false;
      const StructureConstants& qref = reference_quotient_table();
      for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j)
          for (int k = 0; k < 12; ++k)
            if (q.c(i, j, k) != qref.c(i, j, k)) ++mismatches;
    }
    auto& c = ch.add("quotient-table-12", center_ok && reps_ok && mismatches == 0);
    c["entries"] = 144;
    c["mismatches"] = mismatches;
  }

  Json out;
  out["checks"] = std::move(ch.list);
  out["pass"] = ch.all_pass;
  return out;
}

// --------------------------------------------------------------- invariance

Json suite_invariance(const VerifyConfig& cfg) {
  Checks ch;
  const auto& gens = standard_generators();

  {
    Json per = Json::array();
    bool all = true;
    for (int i = 0; i < kAlgebraDim; ++i) {
      InvarianceResult r = infinitesimal_invariance(gens[static_cast<std::size_t>(i)]);
      per.push_back(r.invariant);
      all = all && r.invariant;
    }
    auto& c = ch.add("generator-invariance-symbolic-gamma", all);
    c["per_generator"] = std::move(per);
  }
  {
    VectorField pert = gens[7];
    pert.component(Base::u) += Polynomial::variable(Base::u);
    InvarianceResult r = infinitesimal_invariance(pert);
    auto& c = ch.add("perturbed-field-rejected", !r.invariant && r.witness.has_value());
    if (r.witness) c["failing_equation"] = r.failing_equation;
  }
  {
    Rng rng(cfg.seed);
    int failures = 0;
    for (int trial = 0; trial < 100; ++trial) {
      GeneratorParameters params;
      for (auto& a : params.a) a = rng.small_rational();
      if (!verify_determining(params).empty()) ++failures;
    }
    auto& c = ch.add("determining-equations-random-100", failures == 0);
    c["failures"] = failures;
  }
  {
    // One corruption per coefficient family must be caught.
    struct Corruption {
      Base target;
      int var;
      const char* name;
    };
    const Corruption cs[] = {
        {Base::t, var_index(Base::x), "time-coefficient"},
        {Base::x, var_index(Base::x), "space-coefficient"},  // x^2 via squaring below
        {Base::u, var_index(Base::p), "velocity-coefficient"},
        {Base::p, var_index(Base::x), "pressure-coefficient"},
        {Base::q, var_index(Base::t), "density-coefficient"},
    };
    Json per = Json::array();
    bool all = true;
    for (const auto& corr : cs) {
      GeneratorParameters params;
      params.a[7] = 1;  // a8: a generic valid direction
      params.a[3] = Rational(1, 2);
      VectorField x = generator_from_parameters(params);
      Polynomial bad = Polynomial::variable(corr.var);
      if (corr.target == Base::x) bad = bad * bad;
      x.component(corr.target) += bad;
      bool caught = !verify_determining(x).empty();
      Json e;
      e["family"] = corr.name;
      e["caught"] = caught;
      per.push_back(std::move(e));
      all = all && caught;
    }
    ch.add("seeded-corruptions-detected", all)["cases"] = std::move(per);
  }

  Json out;
  out["checks"] = std::move(ch.list);
  out["pass"] = ch.all_pass;
  return out;
}

// ------------------------------------------------------------------ adjoint

std::array<double, 13> eq11_formulas(const std::array<double, 13>& a,
                                     const std::array<double, 7>& s) {
  auto A = [&](int k) { return a[static_cast<std::size_t>(k - 1)]; };
  auto S = [&](int k) { return s[static_cast<std::size_t>(k - 1)]; };
  return {
      S(3) * A(12) - S(2) * A(10) - S(1) * A(9) + A(1) - S(5) * S(4) * A(8) + S(5) * A(4) -
          S(4) * A(5),
      -S(6) * S(4) * A(8) + S(3) * A(11) - S(2) * A(9) + S(1) * A(10) + A(2) + S(6) * A(4) -
          S(4) * A(6),
      -S(7) * S(4) * A(8) - S(3) * A(9) - S(2) * A(11) - S(1) * A(12) + A(3) + S(7) * A(4) -
          S(4) * A(7),
      A(4) - S(4) * A(8),
      -S(6) * A(10) - S(5) * A(9) + S(5) * A(8) + A(5) + S(7) * A(12),
      -S(6) * A(9) + S(6) * A(8) + S(5) * A(10) + A(6) + S(7) * A(11),
      S(7) * A(8) - S(6) * A(11) - S(5) * A(12) + A(7) - S(7) * A(9),
      A(8), A(9), A(10), A(11), A(12), A(13),
  };
}

Vec13 bracket_double(const Vec13& x, const Vec13& y) {
  const StructureConstants& sc = euler_algebra();
  Vec13 out = Vec13::Zero();
  for (const auto& [key, c] : sc.constants()) {
    auto [i, j, k] = key;
    out(k) += to_double(c) * x(i) * y(j);
  }
  return out;
}

Json suite_adjoint(const VerifyConfig& cfg) {
  Checks ch;
  {
    double worst = 0;
    for (int i = 1; i <= 13; ++i)
      for (double s : {-1.0, -0.5, 0.25, 1.0}) {
        Mat13 a = adjoint_series(i, s, 1e-16).m;
        Mat13 b = adjoint_closed(i, s).m;
        worst = std::max(worst, (a - b).cwiseAbs().maxCoeff());
      }
    auto& c = ch.add("series-matches-closed-form", worst <= 1e-12);
    c["max_diff"] = worst;
  }
  {
    Mat13 m = adjoint_closed(13, 0.7).m;
    ch.add("central-generator-acts-trivially",
           (m - Mat13::Identity()).cwiseAbs().maxCoeff() == 0.0);
  }
  {
    const double s = 0.37;
    Mat13 t = adjoint_closed(1, s).m.transpose();
    Mat13 expect = Mat13::Identity();
    expect(8, 0) = -s;
    expect(9, 1) = s;
    expect(11, 2) = -s;
    ch.add("x1-adjoint-matrix-pattern", (t - expect).cwiseAbs().maxCoeff() <= 1e-15);
  }
  {
    const double s = 0.81;
    Mat13 t = adjoint_closed(12, s).m.transpose();
    Mat13 expect = Mat13::Identity();
    const double cs = std::cos(s), sn = std::sin(s);
    const int pairs[3][2] = {{0, 2}, {4, 6}, {9, 10}};
    for (auto [i, j] : pairs) {
      expect(i, i) = cs;
      expect(i, j) = sn;
      expect(j, i) = -sn;
      expect(j, j) = cs;
    }
    ch.add("rotation-adjoint-block-pattern", (t - expect).cwiseAbs().maxCoeff() <= 1e-12);
  }
  {
    Rng rng(cfg.seed);
    double worst = 0;
    for (int trial = 0; trial < 200; ++trial) {
      int i = 1 + rng.upto(13);
      double s = rng.range(-2, 2), t = rng.range(-2, 2);
      Mat13 a = adjoint_closed(i, s).m * adjoint_closed(i, t).m;
      Mat13 b = adjoint_closed(i, s + t).m;
      worst = std::max(worst, (a - b).cwiseAbs().maxCoeff());
    }
    ch.add("one-parameter-group-property", worst <= 1e-10)["max_diff"] = worst;
  }
  {
    Rng rng(cfg.seed + 1);
    double worst = 0;
    for (int trial = 0; trial < 200; ++trial) {
      int i = 1 + rng.upto(13);
      double s = rng.range(-1, 1);
      Vec13 x, y;
      for (int k = 0; k < 13; ++k) {
        x(k) = rng.range(-1, 1);
        y(k) = rng.range(-1, 1);
      }
      Mat13 ad = adjoint_closed(i, s).m;
      Vec13 lhs = bracket_double(ad * x, ad * y);
      Vec13 rhs = ad * bracket_double(x, y);
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    ch.add("adjoint-is-automorphism", worst <= 1e-9)["max_diff"] = worst;
  }
  {
    Rng rng(cfg.seed + 2);
    double worst = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      std::array<double, 13> a;
      std::array<double, 7> s;
      for (auto& v : a) v = rng.range(-2, 2);
      for (auto& v : s) v = rng.range(-1, 1);
      Vec13 av;
      for (int k = 0; k < 13; ++k) av(k) = a[static_cast<std::size_t>(k)];
      Vec13 got = compose_translation_boost(s) * av;
      auto want = eq11_formulas(a, s);
      for (int k = 0; k < 13; ++k)
        worst = std::max(worst, std::abs(got(k) - want[static_cast<std::size_t>(k)]));
    }
    ch.add("translation-boost-composite-formulas", worst <= 1e-12)["max_diff"] = worst;
  }

  Json out;
  out["checks"] = std::move(ch.list);
  out["pass"] = ch.all_pass;
  return out;
}

// ------------------------------------------------------------------ optimal

AlgebraElement make_case_element(int case_id, Rng& rng) {
  AlgebraElement a{};
  for (auto& v : a) v = rng.dyadic();
  auto set = [&](int k, double v) { a[static_cast<std::size_t>(k - 1)] = v; };
  auto get = [&](int k) { return a[static_cast<std::size_t>(k - 1)]; };
  auto zero = [&](std::initializer_list<int> ks) {
    for (int k : ks) set(k, 0.0);
  };
  switch (case_id) {
    case 1:
      set(8, rng.dyadic_nz());
      do {
        set(9, rng.dyadic_nz());
      } while (get(9) == get(8) || get(8) == 2 * get(9));
      break;
    case 2: set(8, rng.dyadic_nz()); set(9, get(8)); set(10, rng.dyadic_nz()); break;
    case 3: set(8, rng.dyadic_nz()); set(9, get(8)); zero({10}); set(12, rng.dyadic_nz()); break;
    case 4:
      set(8, rng.dyadic_nz()); set(9, get(8)); zero({10, 12}); set(11, rng.dyadic_nz());
      break;
    case 5: set(8, rng.dyadic_nz()); set(9, get(8)); zero({10, 11, 12}); break;
    case 6: zero({8}); set(9, rng.dyadic_nz()); break;
    case 7: set(8, rng.dyadic_nz()); zero({9}); set(11, rng.dyadic_nz()); break;
    case 8: set(8, rng.dyadic_nz()); zero({9, 11}); set(12, rng.dyadic_nz()); break;
    case 9: set(8, rng.dyadic_nz()); zero({9, 11, 12}); set(10, rng.dyadic_nz()); break;
    case 10: set(8, rng.dyadic_nz()); zero({9, 10, 11, 12}); break;
    case 11: zero({8, 9}); set(4, rng.dyadic_nz()); set(10, rng.dyadic_nz()); break;
    case 12:
      zero({4, 8, 9});
      set(10, rng.dyadic_nz());
      set(12, rng.dyadic_nz());
      while (get(6) * get(12) + get(7) * get(10) == get(5) * get(11)) set(6, rng.dyadic());
      break;
    case 13:
      zero({4, 8, 9});
      set(10, rng.dyadic_nz());
      set(12, rng.dyadic_nz());
      set(11, 1.0);
      set(5, get(6) * get(12) + get(7) * get(10));
      break;
    case 14: zero({8, 9, 10}); set(4, rng.dyadic_nz()); break;
    case 15: zero({8, 9, 10, 12}); set(4, rng.dyadic_nz()); set(11, rng.dyadic_nz()); break;
    case 16: zero({8, 9, 10, 11, 12}); set(4, rng.dyadic_nz()); break;
    case 17:
      zero({4, 8, 9, 10});
      set(12, rng.dyadic_nz());
      while (get(5) * get(11) == get(6) * get(12)) set(6, rng.dyadic());
      break;
    case 18:
      zero({4, 8, 9, 10});
      set(12, rng.dyadic_nz());
      set(6, rng.dyadic_nz());
      set(11, 1.0);
      set(5, get(6) * get(12));
      break;
    case 19: zero({4, 6, 8, 9, 10, 11}); set(12, rng.dyadic_nz()); set(5, rng.dyadic_nz()); break;
    case 20:
      zero({4, 8, 9, 10, 12});
      set(5, rng.dyadic_nz());
      set(11, rng.dyadic_nz());
      break;
    case 21: zero({4, 8, 9, 10, 11, 12}); set(5, rng.dyadic_nz()); break;
    case 22: zero({4, 5, 8, 9, 10, 12}); set(11, rng.dyadic_nz()); break;
    case 23: zero({4, 5, 8, 9, 10, 11, 12}); set(6, rng.dyadic_nz()); break;
    case 24:
      // a7 = 0 as well: with every other listed coefficient zero the X7
      // coefficient is invariant under the available moves, so only elements
      // with a7 = 0 can meet the printed representative.
      zero({4, 5, 6, 7, 8, 9, 10, 11, 12});
      set(13, rng.dyadic_nz());
      break;
    case 25:
      zero({4, 8, 9, 12});
      set(10, rng.dyadic_nz());
      while (get(7) * get(10) == get(5) * get(11)) set(7, rng.dyadic());
      break;
    case 26:
      zero({4, 8, 9, 12});
      set(10, 1.0);
      set(7, get(5) * get(11));
      break;
    default: throw std::invalid_argument("invalid case id");
  }
  return a;
}

Json suite_optimal(const VerifyConfig& cfg) {
  Checks ch;
  {
    AlgebraElement a{};
    a[7] = 1;
    a[8] = 3;
    bool ok = classify(a).case_id == 1;
    AlgebraElement b{};
    b[7] = 1;
    b[8] = 1;
    b[9] = 2;
    ok = ok && classify(b).case_id == 2;
    AlgebraElement c{};
    c[4] = 1;
    ok = ok && classify(c).case_id == 21;
    ch.add("classification-spot-checks", ok);
  }
  {
    const std::set<int> hard_pass = {1, 5, 6, 10, 16, 21, 24};
    Json per = Json::array();
    bool all_ok = true;
    Rng rng(cfg.seed);
    for (int case_id = 1; case_id <= 26; ++case_id) {
      int passes = 0, diagnostics = 0, replay_bad = 0, reclassified = 0;
      for (int trial = 0; trial < 100; ++trial) {
        AlgebraElement a = make_case_element(case_id, rng);
        NormalizationResult r = normalize(a);
        if (r.case_id != case_id) ++reclassified;
        if (r.mask_reached)
          ++passes;
        else
          ++diagnostics;
        AlgebraElement replay = replay_moves(a, r.moves);
        double dev = 0;
        for (int k = 0; k < kAlgebraDim; ++k) {
          auto j = static_cast<std::size_t>(k);
          dev = std::max(dev, std::abs(replay[j] - r.representative[j]));
        }
        if (dev > 1e-9) ++replay_bad;
      }
      bool case_ok = replay_bad == 0 && (!hard_pass.count(case_id) || diagnostics == 0);
      all_ok = all_ok && case_ok;
      Json e;
      e["case"] = case_id;
      e["passes"] = passes;
      e["mask_unreached"] = diagnostics;
      e["replay_violations"] = replay_bad;
      e["first_match_other_case"] = reclassified;
      e["ok"] = case_ok;
      per.push_back(std::move(e));
    }
    ch.add("normalization-sweep-26x100", all_ok)["cases"] = std::move(per);
  }
  {
    // Exact-rational mode on translation/boost-only inputs.
    std::vector<Rational> a(13, Rational(0));
    a[3] = 1;  // X4
    a[0] = 1;  // X1
    auto rep = normalize_exact(a);
    bool ok = rep.has_value();
    if (ok)
      for (int k = 0; k < 13; ++k) ok = ok && (*rep)[static_cast<std::size_t>(k)] == (k == 3 ? 1 : 0);
    std::vector<Rational> b(13, Rational(0));
    b[7] = 1;
    b[8] = 3;
    b[0] = 1;
    b[4] = 1;
    auto rep2 = normalize_exact(b);
    bool ok2 = rep2.has_value();
    if (ok2) {
      for (int k = 0; k < 7; ++k) ok2 = ok2 && (*rep2)[static_cast<std::size_t>(k)] == 0;
      ok2 = ok2 && (*rep2)[7] == 1 && (*rep2)[8] == 3;
    }
    ch.add("exact-rational-normalization", ok && ok2);
  }

  Json out;
  out["checks"] = std::move(ch.list);
  out["pass"] = ch.all_pass;
  return out;
}

// ----------------------------------------------------------------- residual

Json suite_residual(const VerifyConfig& cfg) {
  Checks ch;
  const EulerSystem sys{cfg.gamma};
  const Grid grid = Grid::default_grid();

  auto field_max = [](const ResidualReport& r) {
    double m = 0;
    for (double v : r.max_norm) m = std::max(m, v);
    return m;
  };

  {
    Json per = Json::array();
    bool all = true;
    for (const SolutionField& f :
         {constant_state(), uniform_flow(0.3, -0.2, 0.5, 2.0, 1.5), stratified_state(1.0)}) {
      double m = field_max(residual(f, sys, grid));
      Json e;
      e["field"] = f.name;
      e["max_residual"] = m;
      e["pass"] = m <= 1e-13;
      all = all && m <= 1e-13;
      per.push_back(std::move(e));
    }
    ch.add("exact-solution-residuals", all)["fields"] = std::move(per);
  }
  {
    Json per = Json::array();
    bool all = true;
    for (int i = 1; i <= 13; ++i) {
      for (double base : {0.4, -0.25}) {
        double parameter = (i == 8 || i == 9 || i == 13) ? std::exp(base) : base;
        TransformSpec spec = TransformSpec::single(i, parameter);
        auto res = symmetry_preservation(spec, stratified_state(1.0), sys, grid);
        all = all && res.pass;
        Json e;
        e["generator"] = i;
        e["parameter"] = parameter;
        e["after_max"] = field_max(res.after);
        e["pass"] = res.pass;
        per.push_back(std::move(e));
      }
    }
    ch.add("single-generator-preservation", all)["transforms"] = std::move(per);
  }
  {
    Rng rng(cfg.seed);
    Json per = Json::array();
    bool all = true;
    for (int trial = 0; trial < 20; ++trial) {
      std::array<double, 6> c{rng.range(0.5, 2), rng.range(0.5, 2), rng.range(-1, 1),
                              rng.range(-1, 1), rng.range(-1, 1), rng.range(0.5, 2)};
      double s = rng.range(-0.3, 0.3);
      TransformSpec spec = TransformSpec::composite_family(c, s);
      bool pass = symmetry_preservation(spec, constant_state(), sys, grid).pass &&
                  symmetry_preservation(spec, stratified_state(1.0), sys, grid).pass;
      all = all && pass;
      Json e;
      e["trial"] = trial;
      e["pass"] = pass;
      per.push_back(std::move(e));
    }
    ch.add("composite-family-preservation-20", all)["trials"] = std::move(per);
  }
  {
    Grid g0 = Grid::default_grid();
    for (auto& s : g0.h) s = 1.0 / 8.0;
    std::vector<Grid> grids = {g0, g0.halved(), g0.halved().halved()};
    ConvergenceResult conv = convergence_order(control_trig(), sys, grids);
    bool all = true;
    Json orders = Json::array();
    for (int k = 0; k < 5; ++k) {
      auto j = static_cast<std::size_t>(k);
      orders.push_back(conv.order[j]);
      all = all && !conv.floor_limited[j] && std::abs(conv.order[j] - 2.0) <= 0.2;
    }
    ch.add("central-scheme-order-2", all)["orders"] = std::move(orders);

    ConvergenceResult floorres = convergence_order(stratified_state(1.0), sys, grids);
    bool floored = true;
    for (bool f : floorres.floor_limited) floored = floored && f;
    ch.add("exact-solution-floor-limited", floored);

    ConvergenceResult conv1 = convergence_order(control_trig(), sys, grids, Scheme::kForward1);
    bool all1 = true;
    Json orders1 = Json::array();
    for (int k = 0; k < 5; ++k) {
      auto j = static_cast<std::size_t>(k);
      orders1.push_back(conv1.order[j]);
      all1 = all1 && !conv1.floor_limited[j] && std::abs(conv1.order[j] - 1.0) <= 0.2;
    }
    ch.add("one-sided-scheme-order-1", all1)["orders"] = std::move(orders1);
  }
  {
    StatePoint pt{0.7, 0.3, -0.4, 0.5, 0.2, -0.1, 0.3, 1.2, 1.1};
    double worst = 0;
    for (int i = 1; i <= 13; ++i) worst = std::max(worst, flow_check(i, pt, 0.8));
    ch.add("flow-integration-cross-check", worst <= 1e-7)["max_dev"] = worst;
  }
  {
    Rng rng(cfg.seed + 1);
    double worst_law = 0, worst_inv = 0;
    for (int trial = 0; trial < 100; ++trial) {
      StatePoint pt{rng.range(-1, 1), rng.range(-1, 1), rng.range(-1, 1),
                    rng.range(-1, 1), rng.range(-1, 1), rng.range(-1, 1),
                    rng.range(-1, 1), rng.range(0.5, 2), rng.range(0.5, 2)};
      int i = 1 + rng.upto(13);
      double s1 = rng.range(-1, 1), s2 = rng.range(-1, 1);
      worst_law = std::max(worst_law, group_law_check(i, s1, s2, pt));
      auto back = apply_point(i, -s1, apply_point(i, s1, pt)).as_array();
      auto orig = pt.as_array();
      for (int k = 0; k < 9; ++k)
        worst_inv = std::max(worst_inv,
                             std::abs(back[static_cast<std::size_t>(k)] -
                                      orig[static_cast<std::size_t>(k)]));
    }
    auto& c = ch.add("group-law-and-inverse", worst_law <= 1e-12 && worst_inv <= 1e-12);
    c["max_law_dev"] = worst_law;
    c["max_inverse_dev"] = worst_inv;
  }
  {
    // Pushing a transformed-graph point forward lands back on the original
    // graph; lambda = exp(s) bridges the scaling rules (see errata).
    Rng rng(cfg.seed + 2);
    SolutionField f = control_trig();
    double worst = 0;
    const double s = 0.3;
    for (int i = 1; i <= 13; ++i) {
      double parameter = (i == 8 || i == 9 || i == 13) ? std::exp(s) : s;
      double s_push = (i == 13) ? -s : s;
      SolutionField g = transform_solution(TransformSpec::single(i, parameter), f);
      for (int trial = 0; trial < 100; ++trial) {
        double t = rng.range(0.1, 0.9), x = rng.range(0.1, 0.9), y = rng.range(0.1, 0.9),
               z = rng.range(0.1, 0.9);
        auto gval = g.eval(t, x, y, z);
        StatePoint pt{t, x, y, z, gval[0], gval[1], gval[2], gval[3], gval[4]};
        StatePoint pushed = apply_point(i, s_push, pt);
        auto fval = f.sample(pushed.t, pushed.x, pushed.y, pushed.z);
        worst = std::max({worst, std::abs(pushed.u - fval[0]), std::abs(pushed.v - fval[1]),
                          std::abs(pushed.w - fval[2]), std::abs(pushed.p - fval[3]),
                          std::abs(pushed.q - fval[4])});
      }
    }
    ch.add("point-action-graph-consistency", worst <= 1e-10)["max_dev"] = worst;
  }

  Json out;
  out["checks"] = std::move(ch.list);
  out["pass"] = ch.all_pass;
  return out;
}

}  // namespace

nlohmann::ordered_json run_verify_suite(const std::string& suite, const VerifyConfig& cfg) {
  Json report;
  report["schema_version"] = 1;
  report["suite"] = suite;
  report["seed"] = cfg.seed;
  report["gamma"] = cfg.gamma;

  Json sections = Json::object();
  auto want = [&](const char* name) { return suite == name || suite == "all"; };
  bool matched = false;
  if (want("brackets")) {
    sections["brackets"] = suite_brackets(cfg);
    matched = true;
  }
  if (want("invariance")) {
    sections["invariance"] = suite_invariance(cfg);
    matched = true;
  }
  if (want("adjoint")) {
    sections["adjoint"] = suite_adjoint(cfg);
    matched = true;
  }
  if (want("optimal")) {
    sections["optimal"] = suite_optimal(cfg);
    matched = true;
  }
  if (want("residual")) {
    sections["residual"] = suite_residual(cfg);
    matched = true;
  }
  if (!matched) throw std::invalid_argument("unknown suite: " + suite);

  bool pass = true;
  for (const auto& [key, sec] : sections.items()) pass = pass && sec.at("pass").get<bool>();
  report["sections"] = std::move(sections);
  report["pass"] = pass;
  return report;
}

bool verify_passed(const nlohmann::ordered_json& report) {
  return report.at("pass").get<bool>();
}

}  // namespace lie_euler
