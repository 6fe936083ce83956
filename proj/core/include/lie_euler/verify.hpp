#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "lie_euler/rational.hpp"

namespace lie_euler {

struct VerifyConfig {
  std::uint64_t seed = 42;
  double gamma = 1.4;
};

/// Runs one of the suites {brackets, invariance, adjoint, optimal, residual,
/// all}; the report is deterministic for a fixed config (insertion-ordered
/// JSON, seeded draws). Throws std::invalid_argument for unknown suites.
nlohmann::ordered_json run_verify_suite(const std::string& suite, const VerifyConfig& cfg);

/// True when every check in the report passed.
bool verify_passed(const nlohmann::ordered_json& report);

}  // namespace lie_euler
