#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latstick/errors.hpp"
#include "latstick/graph_model.hpp"
#include "latstick/stick_complex.hpp"

namespace latstick {

struct StickContact {
  int first = -1;
  int second = -1;
  std::string kind;  // "collinear overlap", "crossing", "T-contact"
  Point3 where;      // a point of the intersection
};

struct StickCounts {
  int x = 0;
  int y = 0;
  int z = 0;
  int total = 0;
};

struct AuditReport {
  bool self_avoiding = true;
  std::vector<StickContact> violations;
  std::vector<Point3> unmarked_junctions;
  ValidationReport junction_issues;
  bool reconstruction_ok = false;
  ValidationReport reconstruction_issues;
  StickCounts counts;

  bool clean() const { return self_avoiding && junction_issues.ok() && reconstruction_ok; }
};

// A path between two vertex markers through unmarked degree-2 points.
struct TracedEdge {
  std::string from;
  std::string to;
  std::vector<Point3> polyline;  // bend points only
  std::vector<int> sticks;       // indices into the complex
  int owner = -1;                // component index from stick provenance, -1 if unknown
};

struct ReconstructedGraph {
  std::vector<std::string> vertices;
  std::vector<TracedEdge> edges;
};

// Exact pairwise test. The only allowed contact is a single point that is an
// endpoint of both sticks.
std::vector<StickContact> check_self_avoiding(const StickComplex& complex);

// Every point where three or more stick ends meet must carry a marker, no
// unmarked point may be a dangling end, and a marker's incidence must equal
// the expected degree when one is given.
ValidationReport audit_junctions(const StickComplex& complex,
                                 const std::map<std::string, int>* expected_degrees = nullptr);

// Throws Error(ReconstructionMismatch) when the sticks cannot be decomposed
// into marker-to-marker paths (dangling ends, unmarked junctions, or cycles
// with no marker).
ReconstructedGraph reconstruct_graph(const StickComplex& complex);

// Compares vertex labels and the multiset of edge endpoint pairs against the
// spec's derived graph. Empty report means they match.
ValidationReport compare_graph(const ReconstructedGraph& graph, const SpatialGraphSpec& spec);

// Maximal straight runs with no vertex marker in their interior.
StickCounts count_sticks(const StickComplex& complex);

struct BoundReport {
  int total = 0;
  long long construction = 0;               // 3*alpha_total + 3e - 4v - 2s + k
  std::optional<long long> theorem;         // 3c + 6e - 4v - 2s + 3b + k, when c is known
  bool arc_witness_within_bound = false;    // alpha_total <= c + e + b, so the theorem bound applies
  bool ok() const {
    return total <= construction && (!theorem || !arc_witness_within_bound || total <= *theorem);
  }
};

BoundReport evaluate_bound(const StickCounts& counts, const GraphCensus& census,
                           std::optional<int> declared_crossings);

// evaluate_bound, throwing Error(BoundViolated) when the count exceeds a bound.
BoundReport check_bound(const StickCounts& counts, const GraphCensus& census,
                        std::optional<int> declared_crossings);

// All checks at once; `spec` enables degree and reconstruction comparison.
AuditReport audit(const StickComplex& complex, const SpatialGraphSpec& spec);

}  // namespace latstick
