#include "lie_euler/optimal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lie_euler {

namespace {

struct Coeffs {
  // 1-based views into the element for readability.
  const AlgebraElement& a;
  double operator()(int k) const { return a[static_cast<std::size_t>(k - 1)]; }
};

}  // namespace

ClassifyResult classify(const AlgebraElement& a) {
  bool zero = true;
  for (double v : a)
    if (v != 0.0) zero = false;
  if (zero) throw std::invalid_argument("zero element has no case");

  Coeffs c{a};
  auto z = [&](int k) { return c(k) == 0.0; };
  auto nz = [&](int k) { return c(k) != 0.0; };

  ClassifyResult r;
  // Published order. The first branch additionally excludes a8 == a9 so the
  // a8 = a9 branches (cases 2..5) stay reachable; without the guard they are
  // shadowed and e.g. (a8=a9=1, a10=2) would not land in case 2.
  if (nz(8) && nz(9) && c(8) != c(9) && c(8) != 2 * c(9)) {
    r.case_id = 1;
  } else if (c(8) == c(9) && nz(8) && nz(10)) {
    r.case_id = 2;
  } else if (c(8) == c(9) && nz(8) && z(10) && nz(12)) {
    r.case_id = 3;
  } else if (c(8) == c(9) && nz(8) && z(10) && z(12) && nz(11)) {
    r.case_id = 4;
  } else if (c(8) == c(9) && nz(8) && z(10) && z(11) && z(12)) {
    r.case_id = 5;
  } else if (z(8) && nz(9)) {
    r.case_id = 6;
  } else if (nz(8) && z(9) && nz(11)) {
    r.case_id = 7;
  } else if (nz(8) && z(9) && z(11) && nz(12)) {
    r.case_id = 8;
  } else if (nz(8) && z(9) && z(11) && z(12) && nz(10)) {
    r.case_id = 9;
  } else if (nz(8) && z(9) && z(10) && z(11) && z(12)) {
    r.case_id = 10;
  } else if (z(8) && z(9) && nz(4) && nz(10)) {
    r.case_id = 11;
  } else if (z(4) && z(8) && z(9) && nz(10) && nz(12) &&
             c(6) * c(12) + c(7) * c(10) != c(5) * c(11)) {
    r.case_id = 12;
  } else if (z(4) && z(8) && z(9) && nz(10) && nz(12) &&
             c(6) * c(12) + c(7) * c(10) == c(5) * c(11)) {
    r.case_id = 13;
  } else if (z(8) && z(9) && z(10) && nz(4)) {
    r.case_id = 14;
  } else if (z(8) && z(9) && z(10) && z(12) && nz(4) && nz(11)) {
    r.case_id = 15;  // unreachable after case 14; kept in published order
  } else if (z(8) && z(9) && z(10) && z(11) && z(12) && nz(4)) {
    r.case_id = 16;
  } else if (z(4) && z(8) && z(9) && z(10) && nz(12) && c(5) * c(11) != c(6) * c(12)) {
    r.case_id = 17;
  } else if (z(4) && z(8) && z(9) && z(10) && nz(12) && c(5) * c(11) == c(6) * c(12) && nz(6)) {
    r.case_id = 18;
  } else if (z(4) && z(6) && z(8) && z(9) && z(10) && z(11) && nz(12) && nz(5)) {
    // The published hypothesis also repeats "a6 != 0", contradicting a6 = 0;
    // the contradictory clause is dropped.
    r.case_id = 19;
  } else if (z(4) && z(8) && z(9) && z(10) && z(12) && nz(5) && nz(11)) {
    r.case_id = 20;
  } else if (z(4) && z(8) && z(9) && z(10) && z(11) && z(12) && nz(5)) {
    r.case_id = 21;
  } else if (z(4) && z(5) && z(8) && z(9) && z(10) && z(12) && nz(11)) {
    r.case_id = 22;
  } else if (z(4) && z(5) && z(8) && z(9) && z(10) && z(11) && z(12) && nz(6)) {
    r.case_id = 23;
  } else if (z(4) && z(5) && z(6) && z(8) && z(9) && z(10) && z(11) && z(12)) {
    r.case_id = 24;
  } else if (z(4) && z(8) && z(9) && z(12) && nz(10) && c(7) * c(10) != c(5) * c(11)) {
    r.case_id = 25;
  } else if (z(4) && z(8) && z(9) && z(12) && nz(10) && c(7) * c(10) == c(5) * c(11)) {
    r.case_id = 26;
  } else {
    r.case_id = 0;
    if (nz(8) && nz(9) && c(8) != c(9)) r.notes.push_back("a8,a9 nonzero but a8 = 2a9");
    if (c(8) == c(9) && nz(8)) r.notes.push_back("a8 = a9 branch exhausted");
    if (z(8) && z(9)) r.notes.push_back("a8 = a9 = 0 branch exhausted");
    r.notes.push_back("no published hypothesis matched");
  }
  return r;
}

std::vector<int> canonical_mask(int case_id) {
  switch (case_id) {
    case 1: return {8, 9, 10, 11, 12, 13};
    case 2: return {7, 8, 9, 10, 11, 12, 13};
    case 3: return {6, 7, 8, 9, 11, 12, 13};
    case 4: return {5, 8, 9, 11, 13};
    case 5: return {5, 6, 7, 8, 9, 13};
    case 6: return {4, 9, 10, 11, 12, 13};
    case 7: return {4, 5, 8, 10, 11, 12, 13};
    case 8: return {4, 6, 8, 10, 12, 13};
    case 9: return {4, 7, 8, 10, 12, 13};
    case 10: return {4, 5, 6, 7, 8, 13};
    case 11: return {4, 7, 10, 11, 12, 13};
    case 12: return {7, 10, 11, 12, 13};
    case 13: return {3, 10, 11, 12, 13};
    case 14: return {4, 6, 11, 12, 13};
    case 15: return {4, 5, 11, 13};
    case 16: return {4, 5, 6, 7, 13};
    case 17: return {6, 11, 12, 13};
    case 18: return {2, 11, 12, 13};
    case 19: return {2, 12, 13};
    case 20: return {5, 11, 13};
    case 21: return {2, 3, 5, 13};
    case 22: return {1, 11, 13};
    case 23: return {1, 3, 6, 13};
    case 24: return {1, 2, 3, 13};
    case 25: return {5, 10, 11, 13};
    case 26: return {3, 10, 11, 13};
    default: throw std::invalid_argument("invalid case id");
  }
}

namespace {

// Overall-scalar pivot per case; 0 when the published case has no rescale.
int scale_pivot(int case_id) {
  switch (case_id) {
    case 1:
    case 2:
    case 3:
    case 4:
    case 5: return 8;
    case 6: return 9;
    case 11:
    case 14:
    case 15:
    case 16: return 4;
    case 12: return 7;
    case 17:
    case 23: return 6;
    case 20:
    case 21:
    case 25: return 5;
    case 22: return 11;
    case 26: return 10;
    default: return 0;
  }
}

Vec13 to_vec(const AlgebraElement& a) {
  Vec13 v;
  for (int i = 0; i < kAlgebraDim; ++i) v(i) = a[static_cast<std::size_t>(i)];
  return v;
}

AlgebraElement to_elem(const Vec13& v) {
  AlgebraElement a{};
  for (int i = 0; i < kAlgebraDim; ++i) a[static_cast<std::size_t>(i)] = v(i);
  return a;
}

// Rotates with generator `gen` so that coefficient `coord` (1-based) becomes
// zero; the restriction of the rotation adjoint to the affected pair is a
// plane rotation, so one angle suffices.
void rotate_zero(Vec13& v, int gen, int coord, std::vector<Move>& moves) {
  Mat13 d = Mat13::Zero();
  {
    RatMat ad = ad_matrix(gen);
    for (int r = 0; r < kAlgebraDim; ++r)
      for (int c = 0; c < kAlgebraDim; ++c)
        d(r, c) = -to_double(ad[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
  }
  const int j = coord - 1;
  double aj = v(j);
  double cj = (d * v)(j);
  if (std::hypot(aj, cj) < 1e-300) return;
  double theta = std::atan2(-aj, cj);
  v = adjoint_closed(gen, theta).m * v;
  v(j) = 0.0;  // exact by construction of theta
  moves.push_back({Move::Kind::kAdjoint, gen, theta});
}

struct AffineOutcome {
  Vec13 v;
  std::vector<Move> moves;
};

// Translation/boost sweep: the image under F(s7 X_7)..F(s1 X_1) is affine in
// the remaining parameters once s4 is fixed (or when a8 = 0), so the off-mask
// coefficients among X_1..X_7 are removed by one least-norm solve.
AffineOutcome affine_phase(const Vec13& start, const std::vector<int>& mask) {
  std::vector<bool> in_mask(14, false);
  for (int k : mask) in_mask[static_cast<std::size_t>(k)] = true;

  std::vector<int> targets;  // 0-based coordinate rows
  for (int k = 1; k <= 7; ++k)
    if (!in_mask[static_cast<std::size_t>(k)]) targets.push_back(k - 1);

  const double a8 = start(7);
  double s4_fixed = 0.0;
  bool s4_is_fixed = (a8 != 0.0);
  std::vector<int> unknowns;  // 0-based slots into s1..s7
  if (s4_is_fixed) {
    if (in_mask[4]) {
      // Keep a4 - s4*a8 away from zero so the s5..s7 slots stay coupled to
      // the translation rows.
      double best = -1.0;
      for (double cand : {0.0, 1.0, -1.0}) {
        double mag = std::abs(start(3) - cand * a8);
        if (mag > best) {
          best = mag;
          s4_fixed = cand;
        }
      }
    } else {
      s4_fixed = start(3) / a8;
    }
    unknowns = {0, 1, 2, 4, 5, 6};
  } else {
    unknowns = {0, 1, 2, 3, 4, 5, 6};
  }

  auto eval = [&](const Eigen::VectorXd& u) {
    std::array<double, 7> s{};
    if (s4_is_fixed) s[3] = s4_fixed;
    for (std::size_t i = 0; i < unknowns.size(); ++i)
      s[static_cast<std::size_t>(unknowns[i])] = u(static_cast<Eigen::Index>(i));
    return Vec13(compose_translation_boost(s) * start);
  };

  const auto nu = static_cast<Eigen::Index>(unknowns.size());
  const auto nt = static_cast<Eigen::Index>(targets.size());
  Eigen::VectorXd u = Eigen::VectorXd::Zero(nu);
  if (nt > 0 && nu > 0) {
    Vec13 base = eval(u);
    Eigen::MatrixXd mat(nt, nu);
    Eigen::VectorXd rhs(nt);
    for (Eigen::Index r = 0; r < nt; ++r) rhs(r) = base(targets[static_cast<std::size_t>(r)]);
    for (Eigen::Index i = 0; i < nu; ++i) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(nu);
      e(i) = 1.0;
      Vec13 col = eval(e) - base;
      for (Eigen::Index r = 0; r < nt; ++r) mat(r, i) = col(targets[static_cast<std::size_t>(r)]);
    }
    u = mat.completeOrthogonalDecomposition().solve(-rhs);
  }

  std::array<double, 7> s{};
  if (s4_is_fixed) s[3] = s4_fixed;
  for (std::size_t i = 0; i < unknowns.size(); ++i)
    s[static_cast<std::size_t>(unknowns[i])] = u(static_cast<Eigen::Index>(i));

  AffineOutcome out;
  out.v = compose_translation_boost(s) * start;
  for (int i = 0; i < 7; ++i)
    if (s[static_cast<std::size_t>(i)] != 0.0)
      out.moves.push_back({Move::Kind::kAdjoint, i + 1, s[static_cast<std::size_t>(i)]});
  return out;
}

double off_mask_max(const Vec13& v, const std::vector<int>& mask) {
  std::vector<bool> in_mask(14, false);
  for (int k : mask) in_mask[static_cast<std::size_t>(k)] = true;
  double m = 0.0;
  for (int k = 1; k <= kAlgebraDim; ++k)
    if (!in_mask[static_cast<std::size_t>(k)]) m = std::max(m, std::abs(v(k - 1)));
  return m;
}

}  // namespace

NormalizationResult normalize(const AlgebraElement& a, double tol) {
  ClassifyResult cr = classify(a);
  NormalizationResult res;
  res.case_id = cr.case_id;
  if (cr.case_id == 0) {
    res.representative = a;
    double m = 0.0;
    for (double v : a) m = std::max(m, std::abs(v));
    res.off_mask_norm = m;
    return res;
  }
  const std::vector<int> mask = canonical_mask(cr.case_id);
  const Vec13 start = to_vec(a);

  auto attempt = [&](bool with_rotation) {
    Vec13 v = start;
    std::vector<Move> moves;
    if (with_rotation) {
      // Align the boost vector (a5,a6,a7) with the single boost axis the
      // mask keeps; rotation pairs: X10:(5,6), X11:(6,7), X12:(5,7).
      std::vector<int> boost_axes;
      for (int k : mask)
        if (k >= 5 && k <= 7) boost_axes.push_back(k);
      if (boost_axes.size() == 1) {
        switch (boost_axes[0]) {
          case 5:
            rotate_zero(v, 12, 7, moves);
            rotate_zero(v, 10, 6, moves);
            break;
          case 6:
            rotate_zero(v, 11, 7, moves);
            rotate_zero(v, 10, 5, moves);
            break;
          case 7:
            rotate_zero(v, 12, 5, moves);
            rotate_zero(v, 11, 6, moves);
            break;
        }
      }
    }
    AffineOutcome aff = affine_phase(v, mask);
    moves.insert(moves.end(), aff.moves.begin(), aff.moves.end());
    int pivot = scale_pivot(cr.case_id);
    Vec13 w = aff.v;
    if (pivot != 0 && std::abs(w(pivot - 1)) > 1e-12 && w(pivot - 1) != 1.0) {
      double lambda = 1.0 / w(pivot - 1);
      w *= lambda;
      moves.push_back({Move::Kind::kScale, 0, lambda});
    }
    return std::pair<Vec13, std::vector<Move>>(w, std::move(moves));
  };

  auto [v, moves] = attempt(false);
  double off = off_mask_max(v, mask);
  if (off > tol) {
    auto [vr, mr] = attempt(true);
    double offr = off_mask_max(vr, mask);
    if (offr < off) {
      v = vr;
      moves = std::move(mr);
      off = offr;
    }
  }

  res.moves = std::move(moves);
  res.off_mask_norm = off;
  res.mask_reached = off <= tol;
  if (res.mask_reached) {
    // Clean sub-tolerance residue so the representative's support sits
    // inside the mask; replay still matches within tol.
    std::vector<bool> in_mask(14, false);
    for (int k : mask) in_mask[static_cast<std::size_t>(k)] = true;
    for (int k = 1; k <= kAlgebraDim; ++k)
      if (!in_mask[static_cast<std::size_t>(k)]) v(k - 1) = 0.0;
  }
  res.representative = to_elem(v);
  return res;
}

AlgebraElement replay_moves(const AlgebraElement& a, const std::vector<Move>& moves) {
  Vec13 v = to_vec(a);
  for (const Move& m : moves) {
    if (m.kind == Move::Kind::kAdjoint) {
      v = adjoint_closed(m.generator, m.parameter).m * v;
    } else {
      v *= m.parameter;
    }
  }
  return to_elem(v);
}

std::optional<std::vector<Rational>> normalize_exact(const std::vector<Rational>& a) {
  if (a.size() != kAlgebraDim) throw std::invalid_argument("need 13 coefficients");
  AlgebraElement ad{};
  for (int i = 0; i < kAlgebraDim; ++i) ad[static_cast<std::size_t>(i)] = to_double(a[static_cast<std::size_t>(i)]);
  ClassifyResult cr = classify(ad);
  if (cr.case_id == 0) return std::nullopt;
  const std::vector<int> mask = canonical_mask(cr.case_id);
  std::vector<bool> in_mask(14, false);
  for (int k : mask) in_mask[static_cast<std::size_t>(k)] = true;

  std::vector<int> targets;
  for (int k = 1; k <= 7; ++k)
    if (!in_mask[static_cast<std::size_t>(k)]) targets.push_back(k - 1);

  const Rational a8 = a[7];
  bool s4_is_fixed = (a8 != 0);
  Rational s4_fixed(0);
  std::vector<int> unknowns;
  if (s4_is_fixed) {
    if (in_mask[4]) {
      Rational best(-1);
      for (int cand : {0, 1, -1}) {
        Rational mag = abs(a[3] - Rational(cand) * a8);
        if (mag > best) {
          best = mag;
          s4_fixed = cand;
        }
      }
    } else {
      s4_fixed = a[3] / a8;
    }
    unknowns = {0, 1, 2, 4, 5, 6};
  } else {
    unknowns = {0, 1, 2, 3, 4, 5, 6};
  }

  auto eval = [&](const RatVec& u) {
    std::array<Rational, 7> s{};
    if (s4_is_fixed) s[3] = s4_fixed;
    for (std::size_t i = 0; i < unknowns.size(); ++i)
      s[static_cast<std::size_t>(unknowns[i])] = u[i];
    RatMat m = compose_translation_boost_exact(s);
    RatVec out(kAlgebraDim, Rational(0));
    for (int r = 0; r < kAlgebraDim; ++r)
      for (int c = 0; c < kAlgebraDim; ++c)
        out[static_cast<std::size_t>(r)] +=
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * a[static_cast<std::size_t>(c)];
    return out;
  };

  RatVec u(unknowns.size(), Rational(0));
  if (!targets.empty()) {
    RatVec base = eval(u);
    RatMat mat(targets.size(), RatVec(unknowns.size(), Rational(0)));
    RatVec rhs(targets.size(), Rational(0));
    for (std::size_t r = 0; r < targets.size(); ++r)
      rhs[r] = -base[static_cast<std::size_t>(targets[r])];
    for (std::size_t i = 0; i < unknowns.size(); ++i) {
      RatVec e(unknowns.size(), Rational(0));
      e[i] = 1;
      RatVec col = eval(e);
      for (std::size_t r = 0; r < targets.size(); ++r)
        mat[r][i] = col[static_cast<std::size_t>(targets[r])] - base[static_cast<std::size_t>(targets[r])];
    }
    auto sol = solve(mat, rhs);
    if (!sol) return std::nullopt;
    u = *sol;
  }

  RatVec v = eval(u);
  int pivot = scale_pivot(cr.case_id);
  if (pivot != 0 && v[static_cast<std::size_t>(pivot - 1)] != 0) {
    Rational lambda = Rational(1) / v[static_cast<std::size_t>(pivot - 1)];
    for (auto& x : v) x *= lambda;
  }
  for (int k = 1; k <= kAlgebraDim; ++k)
    if (!in_mask[static_cast<std::size_t>(k)] && v[static_cast<std::size_t>(k - 1)] != 0)
      return std::nullopt;
  return v;
}

}  // namespace lie_euler
