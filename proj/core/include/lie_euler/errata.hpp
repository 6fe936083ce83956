#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace lie_euler {

/// One documented correction applied on top of the published source material.
struct Erratum {
  std::string id;
  std::string location;
  std::string printed;
  std::string implemented;
  std::string evidence;
};

const std::vector<Erratum>& errata();

nlohmann::json errata_to_json();
std::string errata_to_markdown();

}  // namespace lie_euler
