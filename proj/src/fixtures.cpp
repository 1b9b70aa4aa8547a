#include "latstick/fixtures.hpp"

namespace latstick {

namespace {

using Labels = std::vector<std::optional<std::string>>;

ComponentSpec component(std::string id, Labels labels, std::vector<Arc> arcs) {
  return {std::move(id), ArcPresentation{std::move(labels), std::move(arcs)}};
}

SpatialGraphSpec single(ComponentSpec c, std::optional<int> crossings = std::nullopt) {
  SpatialGraphSpec s;
  s.components.push_back(std::move(c));
  s.declared_crossings = crossings;
  return s;
}

// Shift-2 grid on five points: the standard minimal grid of the trefoil.
std::vector<Arc> trefoil_arcs() { return {{1, 1, 3}, {2, 2, 4}, {3, 3, 5}, {4, 1, 4}, {5, 2, 5}}; }

}  // namespace

const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names{"unknot", "trefoil", "figure8", "theta-planar", "bouquet3",
                                              "theta-composite"};
  return names;
}

std::optional<SpatialGraphSpec> demo_fixture(const std::string& name) {
  if (name == "unknot") {
    return single(component("knot", {"v", std::nullopt}, {{1, 1, 2}, {2, 1, 2}}), 0);
  }
  if (name == "trefoil") {
    return single(component("knot", {"v", std::nullopt, std::nullopt, std::nullopt, std::nullopt}, trefoil_arcs()),
                  3);
  }
  if (name == "figure8") {
    return single(component("knot", {"v", std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt},
                            {{1, 1, 3}, {2, 2, 5}, {3, 4, 6}, {4, 3, 5}, {5, 1, 4}, {6, 2, 6}}),
                  4);
  }
  if (name == "theta-planar") {
    return single(component("theta", {"a", "b"}, {{1, 1, 2}, {2, 1, 2}, {3, 1, 2}}), 0);
  }
  if (name == "bouquet3") {
    return single(component("bouquet", {std::nullopt, "v", std::nullopt, std::nullopt},
                            {{1, 1, 2}, {2, 1, 2}, {3, 2, 3}, {4, 2, 3}, {5, 2, 4}, {6, 2, 4}}),
                  0);
  }
  if (name == "theta-composite") {
    SpatialGraphSpec s;
    s.components.push_back(
        component("theta", {"a", std::nullopt, "b"}, {{1, 1, 2}, {2, 1, 3}, {3, 1, 3}, {4, 2, 3}}));
    s.components.push_back(
        component("loop", {std::nullopt, "a", std::nullopt, std::nullopt, std::nullopt}, trefoil_arcs()));
    s.attachments.push_back({"theta", "loop", "a"});
    s.declared_crossings = 3;
    return s;
  }
  return std::nullopt;
}

SpatialGraphSpec theta_chain_fixture() {
  SpatialGraphSpec s;
  s.components.push_back(component("left", {"a", "b"}, {{1, 1, 2}, {2, 1, 2}, {3, 1, 2}}));
  s.components.push_back(component("bridge", {"b", "c"}, {{1, 1, 2}}));
  s.components.push_back(component("right", {"c", "d"}, {{1, 1, 2}, {2, 1, 2}, {3, 1, 2}}));
  s.attachments.push_back({"left", "bridge", "b"});
  s.attachments.push_back({"bridge", "right", "c"});
  s.declared_crossings = 0;
  return s;
}

std::optional<int> reference_determinant(const std::string& name) {
  if (name == "unknot") return 1;
  if (name == "trefoil") return 3;
  if (name == "figure8") return 5;
  return std::nullopt;
}

}  // namespace latstick
