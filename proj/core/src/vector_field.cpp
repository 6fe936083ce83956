#include "lie_euler/vector_field.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace lie_euler {

bool VectorField::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

VectorField& VectorField::operator+=(const VectorField& rhs) {
  for (int i = 0; i < kNumBase; ++i) {
    coeffs_[static_cast<std::size_t>(i)] += rhs.coeffs_[static_cast<std::size_t>(i)];
  }
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& rhs) {
  for (int i = 0; i < kNumBase; ++i) {
    coeffs_[static_cast<std::size_t>(i)] -= rhs.coeffs_[static_cast<std::size_t>(i)];
  }
  return *this;
}

VectorField& VectorField::operator*=(const Rational& c) {
  for (auto& comp : coeffs_) comp *= c;
  return *this;
}

std::string VectorField::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kNumBase; ++i) {
    const Polynomial& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*d_" << kBaseNames[i];
  }
  return first ? "0" : os.str();
}

nlohmann::json VectorField::to_json() const {
  nlohmann::json out = nlohmann::json::object();
  for (int i = 0; i < kNumBase; ++i) {
    const Polynomial& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, coef] : c.terms()) {
      nlohmann::json expo = nlohmann::json::array();
      for (int v = 0; v < kNumBase; ++v) {
        expo.push_back(static_cast<int>(m[static_cast<std::size_t>(v)]));
      }
      terms.push_back({to_string(coef), expo});
    }
    out[kBaseNames[i]] = terms;
  }
  return out;
}

VectorField bracket(const VectorField& x, const VectorField& y) {
  VectorField out;
  for (int k = 0; k < kNumBase; ++k) {
    Polynomial comp;
    for (int i = 0; i < kNumBase; ++i) {
      Base bi = static_cast<Base>(i);
      Base bk = static_cast<Base>(k);
      comp += x.component(bi) * y.component(bk).derivative(bi);
      comp -= y.component(bi) * x.component(bk).derivative(bi);
    }
    out.component(static_cast<Base>(k)) = std::move(comp);
  }
  return out;
}

std::array<double, kNumBase> evaluate(const VectorField& x,
                                      const std::array<double, kNumBase>& point) {
  std::array<double, kNumVars> full{};
  for (int i = 0; i < kNumBase; ++i) {
    full[static_cast<std::size_t>(i)] = point[static_cast<std::size_t>(i)];
  }
  std::array<double, kNumBase> out{};
  for (int i = 0; i < kNumBase; ++i) {
    out[static_cast<std::size_t>(i)] =
        x.component(static_cast<Base>(i)).evaluate(full);
  }
  return out;
}

namespace {

// Total derivative D_k(f) for f depending on base coordinates only,
// expressed in jet variables: D_k f = f_k + sum_j f_{u_j} * u_{j,k}.
Polynomial total_derivative(const Polynomial& f, Independent k) {
  Polynomial out = f.derivative(base_of(k));
  for (int j = 0; j < kNumDependent; ++j) {
    Dependent dep = static_cast<Dependent>(j);
    out += f.derivative(base_of(dep)) * Polynomial::variable(dep, k);
  }
  return out;
}

}  // namespace

ProlongedField prolong1(const VectorField& x) {
  ProlongedField out;
  out.base = x;
  for (int j = 0; j < kNumDependent; ++j) {
    Dependent dep = static_cast<Dependent>(j);
    const Polynomial& eta = x.component(base_of(dep));
    for (int k = 0; k < kNumIndependent; ++k) {
      Independent ind = static_cast<Independent>(k);
      Polynomial phi = total_derivative(eta, ind);
      for (int i = 0; i < kNumIndependent; ++i) {
        Independent ii = static_cast<Independent>(i);
        const Polynomial& xi = x.component(base_of(ii));
        phi -= total_derivative(xi, ind) * Polynomial::variable(dep, ii);
      }
      out.jet_coeffs[static_cast<std::size_t>(var_index(dep, ind) - kJetOffset)] =
          std::move(phi);
    }
  }
  return out;
}

Polynomial lie_derivative(const ProlongedField& x, const Polynomial& f) {
  Polynomial out;
  for (int i = 0; i < kNumBase; ++i) {
    Base b = static_cast<Base>(i);
    out += x.base.component(b) * f.derivative(b);
  }
  for (int j = 0; j < kNumJet; ++j) {
    out += x.jet_coeffs[static_cast<std::size_t>(j)] *
           f.derivative(kJetOffset + j);
  }
  return out;
}

Polynomial lie_derivative(const VectorField& x, const Polynomial& f) {
  bool needs_jet = false;
  for (int j = 0; j < kNumJet && !needs_jet; ++j) {
    needs_jet = f.degree_in(kJetOffset + j) > 0;
  }
  if (!needs_jet) {
    Polynomial out;
    for (int i = 0; i < kNumBase; ++i) {
      Base b = static_cast<Base>(i);
      out += x.component(b) * f.derivative(b);
    }
    return out;
  }
  return lie_derivative(prolong1(x), f);
}

}  // namespace lie_euler
