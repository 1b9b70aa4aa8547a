#include "latstick/lattice_build.hpp"

#include <algorithm>
#include <sstream>

namespace latstick {

namespace {

Rational chebyshev(const PlanePoint& a, const PlanePoint& b) {
  return std::max(abs(a[0] - b[0]), abs(a[1] - b[1]));
}

Point3 apply(const ComponentFrame& f, const Point3& p) { return f.apply(p); }

PlanePoint apply_plane(const ComponentFrame& f, const PlanePoint& p) { return f.apply(p); }

int bp_of(const ComponentBuild& b, const std::string& vertex) {
  const auto bp = b.presentation.binding_of(vertex);
  if (!bp) throw Error(ErrorCode::InvalidSpec, "cut vertex '" + vertex + "' missing from a component");
  return *bp;
}

}  // namespace

PlanePoint ComponentFrame::apply(const PlanePoint& local) const {
  Rational dx = local[0] - pivot[0];
  Rational dy = local[1] - pivot[1];
  for (int t = 0; t < ((quarter_turns % 4) + 4) % 4; ++t) {
    Rational nx = -dy;
    dy = dx;
    dx = nx;
  }
  return {dx * scale + offset.x(), dy * scale + offset.y()};
}

Point3 ComponentFrame::apply(const Point3& local) const {
  const auto xy = apply(PlanePoint{local.x(), local.y()});
  return {xy[0], xy[1], local.z() * scale + offset.z()};
}

Assembly assemble(const CutTree& tree, const std::vector<ComponentBuild>& builds, const std::vector<int>& turns) {
  Assembly out;
  out.frames.resize(tree.nodes.size());
  std::vector<PlanePoint> placed_axes;
  std::optional<Rational> top;

  for (std::size_t pos = 0; pos < tree.nodes.size(); ++pos) {
    const auto& node = tree.nodes[pos];
    const auto& build = builds.at(node.component);
    const auto local = build.render();
    ComponentFrame frame;
    frame.owner = node.component;

    Rational local_min_z = 1;
    if (node.stem < 0) {
      frame.scale = 1;
      frame.offset = Point3(0, 0, top ? *top + 1 - local_min_z : Rational(0));
    } else {
      const auto& stem_frame = out.frames[node.stem];
      const auto& stem_build = builds.at(tree.nodes[node.stem].component);
      const int stem_bp = bp_of(stem_build, node.cut_vertex);
      const auto axis = apply_plane(stem_frame, stem_build.column[stem_bp - 1]);
      const auto stem_levels = stem_build.levels(stem_bp);
      const Point3 stem_top = apply(stem_frame, Point3(stem_build.column[stem_bp - 1][0],
                                                       stem_build.column[stem_bp - 1][1], stem_levels.back()));

      std::optional<Rational> nearest;
      for (const auto& other : placed_axes) {
        const auto d = chebyshev(other, axis);
        if (d > 0 && (!nearest || d < *nearest)) nearest = d;
      }
      const Rational radius = nearest ? *nearest / 4 : Rational(1, 4);

      const int branch_bp = bp_of(build, node.cut_vertex);
      const auto& centre = build.column[branch_bp - 1];
      Rational reach = 0;
      for (const auto& st : local.sticks) {
        for (const auto* p : {&st.a(), &st.b()}) {
          reach = std::max(reach, chebyshev({p->x(), p->y()}, centre));
        }
      }
      Rational scale = 1;
      while (scale * reach > radius) scale /= 2;
      frame.scale = scale;
      // Lowest level of every component is page 1.
      frame.offset = Point3(axis[0], axis[1], *top);
      frame.pivot = centre;
      frame.quarter_turns = pos < turns.size() ? turns[pos] : 0;

      const auto branch_levels = build.levels(branch_bp);
      const Point3 branch_bottom = apply(frame, Point3(centre[0], centre[1], branch_levels.front()));
      out.complex.sticks.emplace_back(stem_top, branch_bottom, StickKind::Connector, node.component);
      ++out.connectors;
    }
    out.frames[pos] = frame;

    for (const auto& st : local.sticks) {
      out.complex.sticks.emplace_back(apply(frame, st.a()), apply(frame, st.b()), st.kind(), st.owner());
    }
    for (const auto& [label, p] : local.markers) out.complex.markers[label] = apply(frame, p);
    for (const auto& col : build.column) placed_axes.push_back(apply_plane(frame, col));
    const Rational comp_top = apply(frame, Point3(0, 0, build.presentation.alpha())).z();
    top = top ? std::max(*top, comp_top) : comp_top;

    // Vertex lines.
    for (int bp = 1; bp <= build.presentation.beta(); ++bp) {
      const auto& label = build.presentation.label(bp);
      if (!label) continue;
      const auto axis = apply_plane(frame, build.column[bp - 1]);
      auto [it, fresh] = out.lines.try_emplace(*label);
      auto& line = it->second;
      if (fresh) {
        line.label = *label;
        line.axis = axis;
        line.unit = frame.scale;
      } else if (line.axis != axis) {
        throw Error(ErrorCode::AssemblyCollision, "columns of vertex '" + *label + "' are not aligned");
      }
      line.unit = std::min(line.unit, frame.scale);
      for (int lv : build.levels(bp)) line.levels.push_back(apply(frame, Point3(0, 0, lv)).z());
    }
  }
  for (auto& [label, line] : out.lines) std::sort(line.levels.begin(), line.levels.end());

  const auto contacts = check_self_avoiding(out.complex);
  if (!contacts.empty()) {
    std::ostringstream os;
    os << contacts.size() << " contacts, first " << contacts.front().kind << " at " << contacts.front().where;
    throw Error(ErrorCode::AssemblyCollision, os.str());
  }
  return out;
}

}  // namespace latstick
