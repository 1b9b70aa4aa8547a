#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latstick/errors.hpp"
#include "latstick/geometry_validate.hpp"
#include "latstick/graph_model.hpp"
#include "latstick/stick_complex.hpp"

namespace latstick {

using PlanePoint = std::array<Rational, 2>;

// One cut-component in its local frame. Binding point i starts at column
// position (i, i); the arc on page l joining lo < hi sits at height l as an
// x-stick from column lo to the elbow (x of hi, y of lo) followed by a
// y-stick up to column hi. Side-sliding moves the first and last columns.
struct ComponentBuild {
  int owner = -1;  // index into SpatialGraphSpec::components
  ArcPresentation presentation;
  ComponentClass cls;
  std::vector<PlanePoint> column;  // column[i - 1] for binding point i
  bool columns = false;            // whether column z-sticks are rendered
  // Knot components carry their degree-2 vertex at the elbow of the lowest
  // arc through its binding point, which is always a bend.
  std::optional<std::string> knot_vertex;

  std::optional<Point3> knot_marker() const;

  // Sticks in the local frame.
  StickComplex render() const;
  std::vector<int> levels(int bp) const { return incident_levels(presentation, bp); }
};

// Lattice arc diagram: one x-stick and one y-stick per arc, no columns.
ComponentBuild build_arc_diagram(const ArcPresentation& pres, int owner = -1,
                                 ComponentClass cls = {ComponentKind::General, 0});

// Adds the z-sticks joining consecutive incident levels at every binding point.
ComponentBuild add_columns(ComponentBuild build);

struct SlideReport {
  bool first_applied = false;
  bool last_applied = false;
  int x_removed = 0;
  int y_removed = 0;
  std::vector<std::string> blocked;  // reasons for skipped slides (SlideBlocked, non-fatal)
};

// Slides the first column in +x until its shortest x-stick vanishes, then the
// last column in -y until its shortest y-stick vanishes. A slide that would
// collapse two columns or break self-avoidance is skipped. Single-arc Arc
// components are returned unchanged.
ComponentBuild side_slide(ComponentBuild build, SlideReport* report = nullptr);

// Global placement of a component. Horizontally a local point is taken
// relative to `pivot`, turned by quarter turns about the vertical, scaled and
// moved to `offset`; heights are scaled and shifted.
struct ComponentFrame {
  int owner = -1;
  Rational scale{1};
  Point3 offset;
  PlanePoint pivot{};
  int quarter_turns = 0;

  Point3 apply(const Point3& local) const;
  PlanePoint apply(const PlanePoint& local) const;
};

// The vertical line carrying every column of one vertex after assembly.
struct VertexLine {
  std::string label;
  PlanePoint axis{};
  std::vector<Rational> levels;  // heights of the horizontal attachments, ascending
  Rational unit{1};              // smallest component scale among the columns on this line

  int degree() const { return static_cast<int>(levels.size()); }
  Point3 at(std::size_t i) const { return {axis[0], axis[1], levels.at(i)}; }
};

struct Assembly {
  StickComplex complex;
  std::vector<ComponentFrame> frames;  // by tree position
  std::map<std::string, VertexLine> lines;
  int connectors = 0;
};

// Stacks the components in tree order. Each branch is scaled by a power of
// two into a cylinder around its stem's cut-vertex column, turned about that
// column by `turns[position]` quarter turns (none if omitted), and joined to
// the top of the column by one connector z-stick. Throws
// Error(AssemblyCollision) if the result is not self-avoiding.
Assembly assemble(const CutTree& tree, const std::vector<ComponentBuild>& builds,
                  const std::vector<int>& turns = {});

// Translate moves the target stick sideways together with the corner end of
// its far neighbour. Jog does the same when the far end cannot move (it is a
// vertex or a column) by adding a short stick back to it: one extra stick.
enum class MergeKind { DropDown, Translate, Extend, Jog };

std::string_view merge_kind_name(MergeKind kind);

struct MergeStep {
  int target = 0;  // 0-based index into VertexLine::levels
  Direction direction;
  MergeKind kind = MergeKind::DropDown;
  Rational offset;
};

struct VertexMergePlan {
  std::string vertex;
  Point3 pivot;
  std::vector<MergeStep> steps;
};

struct MergePlan {
  std::vector<VertexMergePlan> vertices;

  int merge_count() const;
};

// Chooses, for every vertex of degree 4..6, which surrogate junctions to
// merge onto the pivot (second attachment from the bottom) and how. Options
// are tried in preference order and checked for self-avoidance; the search
// backtracks over earlier choices at the same vertex. Throws
// Error(NoFreeDirection) or Error(MergeCollision) when nothing works.
MergePlan plan_merges(const StickComplex& complex, const std::map<std::string, VertexLine>& lines);

// Replays a plan. Throws Error(MergeCollision) if a step does not apply.
StickComplex apply_merges(StickComplex complex, const MergePlan& plan,
                          const std::map<std::string, VertexLine>& lines);

struct StraightenReport {
  int straightened = 0;
  int sticks_saved = 0;
  std::vector<std::string> warnings;
};

// Replaces the two-stick realization of every single-arc Arc component by
// one z-stick, moving the branch subtree hanging off its far endpoint so the
// far cut-vertex sits straight above the near one. Arc components with more
// than one arc are left alone with a warning; a straightening that would
// collide is skipped with a warning.
StickComplex straighten_arcs(StickComplex complex, const SpatialGraphSpec& spec, const CutTree& tree,
                             StraightenReport* report = nullptr);

// Multiplies by the LCM of all denominators and translates minima to 0.
// Sticks are fused to maximal runs and edges are traced.
LatticeEmbedding normalize(const StickComplex& complex, const SpatialGraphSpec* spec = nullptr);

struct BuildResult {
  LatticeEmbedding embedding;
  StickComplex complex;  // final exact complex before scaling
  GraphCensus census;
  CutTree tree;
  std::vector<SlideReport> slides;  // by spec component index
  MergePlan merges;
  StraightenReport straighten;
  std::vector<int> turns;  // quarter turns per tree position
  StickCounts counts;
  BoundReport bound;
  int connectors = 0;
};

// diagram -> columns -> side-slide per component, then assemble, merge,
// straighten, normalize. Branch turns are chosen greedily in tree order, each
// one keeping the smallest stick count. The output is audited; any audit
// failure or bound violation throws.
BuildResult build_full(const SpatialGraphSpec& spec);

}  // namespace latstick
