#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "lie_euler/coords.hpp"
#include "lie_euler/rational.hpp"

namespace lie_euler {

/// Exponent vector over the 30 polynomial variables (base, jet, gamma).
using Monomial = std::array<std::uint8_t, kNumVars>;

inline constexpr Monomial kUnitMonomial{};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial constant(Rational c);
  static Polynomial variable(int index);
  static Polynomial variable(Base b) { return variable(var_index(b)); }
  static Polynomial variable(Dependent d, Independent i) {
    return variable(var_index(d, i));
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero when absent).
  Rational constant_term() const;

  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(const Polynomial& a) {
    return Polynomial() - a;
  }

  bool operator==(const Polynomial& rhs) const { return terms_ == rhs.terms_; }

  /// Partial derivative with respect to one variable.
  Polynomial derivative(int var) const;
  Polynomial derivative(Base b) const { return derivative(var_index(b)); }

  /// Total degree in the given variable.
  int degree_in(int var) const;
  /// True when every monomial uses only variables accepted by the predicate.
  bool uses_only(const std::function<bool(int)>& allowed) const;

  Polynomial pow(unsigned n) const;

  /// Replaces one variable by a polynomial.
  Polynomial substituted(int var, const Polynomial& replacement) const;

  /// Evaluates at a point given as values for all variables the polynomial
  /// actually uses (indexed by variable number).
  double evaluate(const std::array<double, kNumVars>& point) const;
  Rational evaluate_exact(const std::array<Rational, kNumVars>& point) const;

  /// Canonical text form, e.g. "3/2*t*u_x - q".
  std::string str() const;

  void add_term(const Monomial& m, const Rational& c);

 private:
  std::map<Monomial, Rational> terms_;
};

}  // namespace lie_euler
