// Worked low-dimensional computations for the bundled examples.

#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace simpfib {

struct DemoExample {
  std::string name;
  std::string summary;
  nlohmann::json spec;
};

std::vector<DemoExample> const& demo_examples();

/// The walkthrough for `name` in dimension `dim` (1..4). Throws
/// std::invalid_argument for an unknown example or dimension.
std::string demo_text(std::string const& name, int dim);

}  // namespace simpfib
