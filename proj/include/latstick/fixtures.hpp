#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latstick/graph_model.hpp"

namespace latstick {

// Names accepted by demo_fixture, in presentation order.
const std::vector<std::string>& demo_names();

// Built-in input documents. Returns nullopt for an unknown name.
std::optional<SpatialGraphSpec> demo_fixture(const std::string& name);

// Fixtures used by tests beyond the demo set.
SpatialGraphSpec theta_chain_fixture();

// Reference knot determinants of the knot demos.
std::optional<int> reference_determinant(const std::string& name);

}  // namespace latstick
