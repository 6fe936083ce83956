#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace lie_euler {

/// Coordinates on the base space, in the fixed order (t,x,y,z,u,v,w,p,q).
enum class Base : int { t = 0, x, y, z, u, v, w, p, q };

inline constexpr int kNumBase = 9;
inline constexpr int kNumIndependent = 4;  // t,x,y,z
inline constexpr int kNumDependent = 5;    // u,v,w,p,q

inline constexpr std::array<const char*, kNumBase> kBaseNames = {
    "t", "x", "y", "z", "u", "v", "w", "p", "q"};

/// Dependent variables, offsets into Base starting at u.
enum class Dependent : int { u = 0, v, w, p, q };
/// Independent variables, offsets into Base starting at t.
enum class Independent : int { t = 0, x, y, z };

/// First-derivative jet coordinate u_t, u_x, ..., q_z (20 symbols).
struct JetCoordinate {
  Dependent dependent;
  Independent independent;
};

// Polynomial variable indexing: base coordinates occupy 0..8, the 20 jet
// coordinates 9..28, and the adiabatic index gamma (carried symbolically in
// the invariance check) is 29.
inline constexpr int kJetOffset = kNumBase;
inline constexpr int kNumJet = kNumDependent * kNumIndependent;
inline constexpr int kGammaVar = kJetOffset + kNumJet;  // 29
inline constexpr int kNumVars = kGammaVar + 1;          // 30

constexpr int var_index(Base b) { return static_cast<int>(b); }

constexpr int var_index(Dependent d, Independent i) {
  return kJetOffset + static_cast<int>(d) * kNumIndependent + static_cast<int>(i);
}

constexpr int var_index(const JetCoordinate& j) {
  return var_index(j.dependent, j.independent);
}

constexpr Base base_of(Dependent d) {
  return static_cast<Base>(static_cast<int>(Base::u) + static_cast<int>(d));
}

constexpr Base base_of(Independent i) {
  return static_cast<Base>(static_cast<int>(i));
}

std::string var_name(int index);

}  // namespace lie_euler
