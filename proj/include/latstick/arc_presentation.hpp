#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latstick/errors.hpp"

namespace latstick {

// One page of the open book: a simple arc between two binding points.
struct Arc {
  int page = 0;
  int lo = 0;  // binding index, lo < hi
  int hi = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Arc presentation of a single cut-component in its local frame. Binding
// points are numbered 1..beta along the binding axis; a binding point may
// carry a global vertex label, otherwise it is an interior point of an edge.
struct ArcPresentation {
  std::vector<std::optional<std::string>> labels;  // labels[i - 1] for binding point i
  std::vector<Arc> arcs;

  int alpha() const { return static_cast<int>(arcs.size()); }
  int beta() const { return static_cast<int>(labels.size()); }
  const std::optional<std::string>& label(int bp) const { return labels.at(bp - 1); }
  int labeled_count() const;
  // Binding index carrying `vertex`, or nullopt.
  std::optional<int> binding_of(const std::string& vertex) const;
  // Index into `arcs` of the arc on the given page, or -1.
  int arc_on_page(int page) const;
};

// An edge of the abstract graph recovered by walking arcs through unlabeled
// (degree-2) binding points.
struct EdgeTrace {
  std::string from;               // vertex label at the start
  std::string to;                 // vertex label at the end (== from for a loop)
  std::vector<int> binding_path;  // binding indices visited, endpoints included
  std::vector<int> arcs;          // indices into ArcPresentation::arcs, in walk order
};

// Reports page-bijection failures, degenerate arcs, degree violations at
// unlabeled points, and the binding-point count law beta = alpha + v - e.
ValidationReport validate_presentation(const ArcPresentation& pres);

// Sorted pages of the arcs incident to binding point `bp`.
// Throws Error(UnknownBindingPoint) for an out-of-range index.
std::vector<int> incident_levels(const ArcPresentation& pres, int bp);

// Number of arc ends at each binding point, indexed 1..beta (slot 0 unused).
std::vector<int> binding_degrees(const ArcPresentation& pres);

// Walks every arc into exactly one edge trace. Throws
// Error(UnlabeledEndpoint) when a walk stops at an unlabeled point whose
// degree is not 2, and Error(InvalidSpec) for a closed walk that never meets
// a labeled point.
std::vector<EdgeTrace> trace_edges(const ArcPresentation& pres);

}  // namespace latstick
