#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latstick/rational.hpp"
#include "latstick/stick_complex.hpp"

namespace latstick {

using Plane = std::array<Rational, 2>;

struct ProjectedSegment {
  int edge = -1;   // index into LatticeEmbedding::edges
  int index = 0;   // position along the edge polyline
  Point3 a;        // original endpoints, in polyline order
  Point3 b;
  Plane p;         // projected endpoints
  Plane q;
};

struct DiagramCrossing {
  int over = -1;   // segment indices
  int under = -1;
  Plane at;
  Rational over_t;   // parameter of `at` along each segment, 0 at a, 1 at b
  Rational under_t;
};

// Shear-projection of an embedding's edge polylines. Generic: no triple
// points, no crossing at a segment end, no overlapping projected segments.
struct GraphDiagram {
  Rational shear;  // N in x' = x + z/N, y' = y + z/N^2
  std::vector<std::string> edge_ids;
  std::vector<std::string> edge_from;
  std::vector<std::string> edge_to;
  std::vector<ProjectedSegment> segments;
  std::vector<DiagramCrossing> crossings;
};

// `component` restricts the diagram to edges tagged with that component id.
// N starts at the least power of two above the coordinate range and at
// least `min_shear`, and doubles until the projection is generic.
GraphDiagram project_generic(const LatticeEmbedding& emb, const std::optional<std::string>& component = std::nullopt,
                             std::int64_t min_shear = 0);

int crossing_count(const GraphDiagram& diagram);

struct GaussVisit {
  int crossing = -1;
  bool over = false;
};

// One closed curve: its crossings with itself in travel order. Crossings with
// edges outside the cycle are ignored.
struct GaussData {
  int crossings = 0;
  std::vector<GaussVisit> sequence;
};

// Requires the diagram's edges to form exactly one cycle.
// Throws Error(NotACycle) otherwise.
GaussData extract_knot_cycle(const GraphDiagram& diagram);

// Coloring matrix rows: 2*over - under_in - under_out, indexed by strand.
std::vector<std::vector<long long>> coloring_matrix(const GaussData& gauss);

// |det| of the coloring matrix with its last row and column removed; 1 for
// diagrams with fewer than two crossings.
BigInt knot_determinant(const GaussData& gauss);

// Largest strand count p_coloring_count accepts.
inline constexpr int kMaxColoringStrands = 64;

// Number of Fox p-colorings, constant ones included. Exhaustive search with
// constraint propagation. Throws Error(TooLarge) above kMaxColoringStrands
// strands and std::invalid_argument for an even or non-prime p.
BigInt p_coloring_count(const GaussData& gauss, int p);

}  // namespace latstick
