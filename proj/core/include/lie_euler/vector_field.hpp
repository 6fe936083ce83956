#pragma once

#include <array>
#include <string>

#include "lie_euler/polynomial.hpp"

#include <nlohmann/json_fwd.hpp>

namespace lie_euler {

/// Vector field on the base space: nine polynomial components indexed by
/// (t,x,y,z,u,v,w,p,q). Components may only involve base coordinates.
class VectorField {
 public:
  VectorField() = default;

  const Polynomial& component(Base b) const {
    return coeffs_[static_cast<std::size_t>(b)];
  }
  Polynomial& component(Base b) { return coeffs_[static_cast<std::size_t>(b)]; }

  const std::array<Polynomial, kNumBase>& components() const { return coeffs_; }

  bool is_zero() const;
  bool operator==(const VectorField& rhs) const { return coeffs_ == rhs.coeffs_; }

  VectorField& operator+=(const VectorField& rhs);
  VectorField& operator-=(const VectorField& rhs);
  VectorField& operator*=(const Rational& c);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const Rational& c, VectorField a) { return a *= c; }

  /// Canonical text form "coef*monomial d_var + ...".
  std::string str() const;
  /// Structured form keyed by target coordinate.
  nlohmann::json to_json() const;

 private:
  std::array<Polynomial, kNumBase> coeffs_;
};

/// First prolongation: the base field plus 20 jet coefficients.
struct ProlongedField {
  VectorField base;
  std::array<Polynomial, kNumJet> jet_coeffs;

  const Polynomial& jet(Dependent d, Independent i) const {
    return jet_coeffs[static_cast<std::size_t>(var_index(d, i) - kJetOffset)];
  }
};

/// Lie bracket [X,Y] with exact rational coefficients.
VectorField bracket(const VectorField& x, const VectorField& y);

/// Component-wise evaluation at a point (t,x,y,z,u,v,w,p,q).
std::array<double, kNumBase> evaluate(const VectorField& x,
                                      const std::array<double, kNumBase>& point);

/// First prolongation to jet space. The jet coefficient for dependent j and
/// independent k is D_k(eta_j) - sum_i D_k(xi_i) * u^j_i with D_k the total
/// derivative truncated to first order.
ProlongedField prolong1(const VectorField& x);

/// Directional derivative of f along x; x is prolonged internally when f
/// involves jet variables.
Polynomial lie_derivative(const VectorField& x, const Polynomial& f);
Polynomial lie_derivative(const ProlongedField& x, const Polynomial& f);

}  // namespace lie_euler
