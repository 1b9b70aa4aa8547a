#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latstick/arc_presentation.hpp"
#include "latstick/errors.hpp"

namespace latstick {

struct ComponentSpec {
  std::string id;
  ArcPresentation presentation;
};

// Declares that `branch` hangs off `stem` at the shared vertex `cut_vertex`.
struct CutAttachment {
  std::string stem;
  std::string branch;
  std::string cut_vertex;
};

// User input: the cut-component decomposition is declared, not computed.
struct SpatialGraphSpec {
  std::vector<ComponentSpec> components;
  std::vector<CutAttachment> attachments;
  std::optional<int> declared_crossings;  // crossings of some diagram, an upper bound on c(G)

  // Index of the component with `id`, or -1.
  int component_index(const std::string& id) const;
};

enum class ComponentKind { Arc, ThetaN, Bouquet, Knot, General };

struct ComponentClass {
  ComponentKind kind = ComponentKind::General;
  int n = 0;  // edge count for ThetaN and Bouquet

  friend bool operator==(const ComponentClass&, const ComponentClass&) = default;
};

std::string to_string(const ComponentClass& c);

// Rooted forest over cut-components, stored in depth-first order so that
// every branch follows its stem and each subtree is contiguous.
struct CutTreeNode {
  int component = -1;  // index into SpatialGraphSpec::components
  int stem = -1;       // position of the stem node in CutTree::nodes, -1 for roots
  std::string cut_vertex;
  std::vector<int> branches;  // positions of branch nodes
  int subtree_end = 0;        // one past the last position of this node's subtree
};

struct CutTree {
  std::vector<CutTreeNode> nodes;
  std::vector<int> roots;  // positions

  int position_of(int component) const;
};

struct GraphCensus {
  int e = 0;
  int v = 0;
  int s = 0;
  int b = 0;
  int k = 0;
  int alpha_total = 0;
  std::map<std::string, int> degrees;  // total degree d(x) over all components
};

std::vector<EdgeTrace> derive_edges(const ComponentSpec& component);

// Classification uses the derived edges. A one-vertex, one-loop component is
// a Knot only when it takes part in no attachment; otherwise it is a Bouquet.
ComponentClass classify_component(const ComponentSpec& component,
                                  std::span<const CutAttachment> attachments = {});

ValidationReport validate_spec(const SpatialGraphSpec& spec);

// Requires a clean validate_spec. Throws Error(NoValidRoot) when a tree has
// only Arc components.
CutTree build_cut_tree(const SpatialGraphSpec& spec);

GraphCensus census(const SpatialGraphSpec& spec);

// Degree of `vertex` inside one component's presentation (0 if absent).
int component_degree(const ComponentSpec& component, const std::string& vertex);

}  // namespace latstick
