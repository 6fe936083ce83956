#include "lie_euler/adjoint.hpp"

#include <cmath>
#include <stdexcept>

namespace lie_euler {

const StructureConstants& euler_algebra() {
  static const StructureConstants sc = [] {
    auto gens = standard_generators();
    return structure_constants_from_fields(gens);
  }();
  return sc;
}

RatMat ad_matrix(int i) {
  if (i < 1 || i > kAlgebraDim) throw std::invalid_argument("generator index out of range");
  return euler_algebra().ad(i - 1);
}

namespace {

Mat13 to_double_mat(const RatMat& m) {
  Mat13 out;
  for (int r = 0; r < kAlgebraDim; ++r)
    for (int c = 0; c < kAlgebraDim; ++c)
      out(r, c) = to_double(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
  return out;
}

bool is_zero(const RatMat& m) {
  for (const auto& row : m)
    for (const auto& v : row)
      if (v != 0) return false;
  return true;
}

bool is_diagonal(const RatMat& m) {
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m[r].size(); ++c)
      if (r != c && m[r][c] != 0) return false;
  return true;
}

RatMat neg(RatMat m) {
  for (auto& row : m)
    for (auto& v : row) v = -v;
  return m;
}

}  // namespace

AdjointMatrix adjoint_series(int i, double s, double tol) {
  // Ad(exp(s X_i)) = exp(-s ad X_i) on coefficient vectors.
  Mat13 n = to_double_mat(ad_matrix(i)) * (-s);
  Mat13 sum = Mat13::Identity();
  Mat13 term = Mat13::Identity();
  bool converged = false;
  for (int k = 1; k <= 60; ++k) {
    term = (term * n) / static_cast<double>(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < tol) {
      converged = true;
      break;
    }
  }
  if (!converged) throw std::runtime_error("not converged");
  return {sum, i, s};
}

AdjointMatrix adjoint_closed(int i, double s) {
  RatMat nrat = neg(ad_matrix(i));  // exp of s * this
  if (is_zero(nrat)) return {Mat13::Identity(), i, s};
  Mat13 n = to_double_mat(nrat);
  RatMat n2rat = mat_mul(nrat, nrat);
  if (is_zero(n2rat)) return {Mat13(Mat13::Identity() + s * n), i, s};
  if (is_diagonal(nrat)) {
    Mat13 out = Mat13::Identity();
    for (int r = 0; r < kAlgebraDim; ++r) out(r, r) = std::exp(s * n(r, r));
    return {out, i, s};
  }
  RatMat n3rat = mat_mul(n2rat, nrat);
  // Rotation pattern: N^3 = -N gives exp(sN) = I + sin(s) N + (1-cos(s)) N^2.
  RatMat check = n3rat;
  for (std::size_t r = 0; r < check.size(); ++r)
    for (std::size_t c = 0; c < check[r].size(); ++c) check[r][c] += nrat[r][c];
  if (is_zero(check)) {
    Mat13 n2 = to_double_mat(n2rat);
    Mat13 out = Mat13::Identity() + std::sin(s) * n + (1.0 - std::cos(s)) * n2;
    return {out, i, s};
  }
  throw std::runtime_error("no closed form for this generator");
}

std::optional<RatMat> adjoint_closed_exact(int i, const Rational& s) {
  RatMat nrat = neg(ad_matrix(i));
  if (is_zero(nrat)) return identity_mat(kAlgebraDim);
  if (!is_zero(mat_mul(nrat, nrat))) return std::nullopt;
  RatMat out = identity_mat(kAlgebraDim);
  for (std::size_t r = 0; r < out.size(); ++r)
    for (std::size_t c = 0; c < out[r].size(); ++c) out[r][c] += s * nrat[r][c];
  return out;
}

Mat13 compose_translation_boost(const std::array<double, 7>& s) {
  Mat13 m = Mat13::Identity();
  for (int i = 1; i <= 7; ++i) {
    m = adjoint_closed(i, s[static_cast<std::size_t>(i - 1)]).m * m;
  }
  return m;
}

RatMat compose_translation_boost_exact(const std::array<Rational, 7>& s) {
  RatMat m = identity_mat(kAlgebraDim);
  for (int i = 1; i <= 7; ++i) {
    auto step = adjoint_closed_exact(i, s[static_cast<std::size_t>(i - 1)]);
    if (!step) throw std::runtime_error("no exact closed form");
    m = mat_mul(*step, m);
  }
  return m;
}

}  // namespace lie_euler
