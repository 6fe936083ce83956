#include "lie_euler/polynomial.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lie_euler {

std::string var_name(int index) {
  if (index < kNumBase) return kBaseNames[index];
  if (index < kJetOffset + kNumJet) {
    int j = index - kJetOffset;
    int dep = j / kNumIndependent;
    int ind = j % kNumIndependent;
    return std::string(kBaseNames[static_cast<int>(Base::u) + dep]) + "_" +
           kBaseNames[ind];
  }
  if (index == kGammaVar) return "gamma";
  throw std::out_of_range("variable index");
}

Polynomial Polynomial::constant(Rational c) {
  Polynomial p;
  p.add_term(kUnitMonomial, c);
  return p;
}

Polynomial Polynomial::variable(int index) {
  if (index < 0 || index >= kNumVars) throw std::out_of_range("variable index");
  Monomial m{};
  m[static_cast<std::size_t>(index)] = 1;
  Polynomial p;
  p.add_term(m, Rational(1));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == kUnitMonomial);
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(kUnitMonomial);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  Polynomial out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      Monomial m;
      for (int i = 0; i < kNumVars; ++i) {
        m[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(
            ma[static_cast<std::size_t>(i)] + mb[static_cast<std::size_t>(i)]);
      }
      out.add_term(m, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    int e = m[static_cast<std::size_t>(var)];
    if (e == 0) continue;
    Monomial dm = m;
    dm[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(e - 1);
    out.add_term(dm, c * e);
  }
  return out;
}

int Polynomial::degree_in(int var) const {
  int deg = 0;
  for (const auto& [m, c] : terms_) {
    deg = std::max(deg, static_cast<int>(m[static_cast<std::size_t>(var)]));
  }
  return deg;
}

bool Polynomial::uses_only(const std::function<bool(int)>& allowed) const {
  for (const auto& [m, c] : terms_) {
    for (int i = 0; i < kNumVars; ++i) {
      if (m[static_cast<std::size_t>(i)] > 0 && !allowed(i)) return false;
    }
  }
  return true;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial out = constant(Rational(1));
  for (unsigned i = 0; i < n; ++i) out *= *this;
  return out;
}

Polynomial Polynomial::substituted(int var, const Polynomial& replacement) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    unsigned e = m[static_cast<std::size_t>(var)];
    Monomial rest = m;
    rest[static_cast<std::size_t>(var)] = 0;
    Polynomial term;
    term.add_term(rest, c);
    if (e > 0) term *= replacement.pow(e);
    out += term;
  }
  return out;
}

double Polynomial::evaluate(const std::array<double, kNumVars>& point) const {
  double total = 0.0;
  for (const auto& [m, c] : terms_) {
    double prod = to_double(c);
    for (int i = 0; i < kNumVars; ++i) {
      for (int e = 0; e < m[static_cast<std::size_t>(i)]; ++e) {
        prod *= point[static_cast<std::size_t>(i)];
      }
    }
    total += prod;
  }
  return total;
}

Rational Polynomial::evaluate_exact(
    const std::array<Rational, kNumVars>& point) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational prod = c;
    for (int i = 0; i < kNumVars; ++i) {
      for (int e = 0; e < m[static_cast<std::size_t>(i)]; ++e) {
        prod *= point[static_cast<std::size_t>(i)];
      }
    }
    total += prod;
  }
  return total;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_vars = !(m == kUnitMonomial);
    if (mag != 1 || !has_vars) {
      os << to_string(mag);
      if (has_vars) os << "*";
    }
    bool first_var = true;
    for (int i = 0; i < kNumVars; ++i) {
      int e = m[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << var_name(i);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace lie_euler
