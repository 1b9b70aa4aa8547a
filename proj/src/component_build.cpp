#include "latstick/lattice_build.hpp"

#include <algorithm>
#include <map>

namespace latstick {

namespace {

Point3 lift(const PlanePoint& p, int level) { return {p[0], p[1], Rational(level)}; }

// Junctions may appear only where an arc meets a column at a middle level,
// and dangling ends only at degree-1 binding points.
bool topology_ok(const ComponentBuild& build, const StickComplex& c) {
  std::map<Point3, int> ends;
  for (const auto& st : c.sticks) {
    ++ends[st.a()];
    ++ends[st.b()];
  }
  std::map<Point3, int> expected;
  const auto& pres = build.presentation;
  for (int bp = 1; bp <= pres.beta(); ++bp) {
    const auto lv = build.levels(bp);
    for (std::size_t i = 0; i < lv.size(); ++i) {
      const bool extreme = i == 0 || i + 1 == lv.size();
      int d = extreme ? 2 : 3;
      if (lv.size() == 1) d = 1;
      expected[lift(build.column[bp - 1], lv[i])] = d;
    }
  }
  for (const auto& [p, n] : ends) {
    const auto it = expected.find(p);
    if (n == 2 && it == expected.end()) continue;  // elbow
    if (it == expected.end() || it->second != n) return false;
  }
  for (const auto& [p, n] : expected) {
    if (!ends.count(p) && n != 1) return false;
  }
  return true;
}

bool columns_distinct(const ComponentBuild& build) {
  for (std::size_t i = 0; i < build.column.size(); ++i) {
    for (std::size_t j = i + 1; j < build.column.size(); ++j) {
      if (build.column[i] == build.column[j]) return false;
    }
  }
  return true;
}

int count_axis(const StickComplex& c, Axis a) {
  return static_cast<int>(
      std::count_if(c.sticks.begin(), c.sticks.end(), [&](const Stick& s) { return s.axis() == a; }));
}

// Empty string when the candidate is acceptable, otherwise the reason.
std::string check_candidate(const ComponentBuild& candidate) {
  if (!columns_distinct(candidate)) return "two columns would coincide";
  for (const auto& arc : candidate.presentation.arcs) {
    if (candidate.column[arc.lo - 1] == candidate.column[arc.hi - 1]) return "an arc would vanish";
  }
  const auto c = candidate.render();
  if (!check_self_avoiding(c).empty()) return "slide would collide";
  if (!topology_ok(candidate, c)) return "slide would create a spurious junction";
  return {};
}

}  // namespace

std::optional<Point3> ComponentBuild::knot_marker() const {
  if (!knot_vertex) return std::nullopt;
  const auto bp = presentation.binding_of(*knot_vertex);
  if (!bp) return std::nullopt;
  const Arc* first = nullptr;
  for (const auto& a : presentation.arcs) {
    if ((a.lo == *bp || a.hi == *bp) && (!first || a.page < first->page)) first = &a;
  }
  if (!first) return std::nullopt;
  const auto& from = column[first->lo - 1];
  const auto& to = column[first->hi - 1];
  return Point3(to[0], from[1], Rational(first->page));
}

StickComplex ComponentBuild::render() const {
  StickComplex c;
  for (const auto& arc : presentation.arcs) {
    const auto& from = column[arc.lo - 1];
    const auto& to = column[arc.hi - 1];
    const Point3 start = lift(from, arc.page);
    const Point3 elbow(to[0], from[1], Rational(arc.page));
    const Point3 end = lift(to, arc.page);
    if (start != elbow) c.sticks.emplace_back(start, elbow, StickKind::Arc, owner);
    if (elbow != end) c.sticks.emplace_back(elbow, end, StickKind::Arc, owner);
  }
  if (columns) {
    for (int bp = 1; bp <= presentation.beta(); ++bp) {
      const auto lv = levels(bp);
      for (std::size_t i = 0; i + 1 < lv.size(); ++i) {
        c.sticks.emplace_back(lift(column[bp - 1], lv[i]), lift(column[bp - 1], lv[i + 1]), StickKind::Column,
                              owner);
      }
    }
  }
  if (auto m = knot_marker()) c.markers[*knot_vertex] = *m;
  return c;
}

ComponentBuild build_arc_diagram(const ArcPresentation& pres, int owner, ComponentClass cls) {
  ComponentBuild b;
  b.owner = owner;
  b.presentation = pres;
  b.cls = cls;
  for (int i = 1; i <= pres.beta(); ++i) b.column.push_back({Rational(i), Rational(i)});
  if (cls.kind == ComponentKind::Knot) {
    for (const auto& l : pres.labels) {
      if (l) b.knot_vertex = *l;
    }
  }
  return b;
}

ComponentBuild add_columns(ComponentBuild build) {
  build.columns = true;
  return build;
}

ComponentBuild side_slide(ComponentBuild build, SlideReport* report) {
  SlideReport local;
  SlideReport& r = report ? *report : local;
  // Single-arc components are straightened later instead.
  if (build.cls.kind == ComponentKind::Arc && build.presentation.alpha() == 1) return build;

  const auto& pres = build.presentation;
  const int beta = pres.beta();
  const auto before = build.render();

  // First binding point: every arc there starts at it, so all its sticks are +x.
  {
    std::optional<Rational> target;
    for (const auto& a : pres.arcs) {
      if (a.lo != 1) continue;
      const auto& x = build.column[a.hi - 1][0];
      if (!target || x < *target) target = x;
    }
    if (target) {
      auto candidate = build;
      candidate.column[0][0] = *target;
      const auto why = check_candidate(candidate);
      if (why.empty()) {
        build = std::move(candidate);
        r.first_applied = true;
      } else {
        r.blocked.push_back("first binding point: " + why);
      }
    }
  }
  // Last binding point: every arc ends there, so all its sticks are -y.
  {
    std::optional<Rational> target;
    for (const auto& a : pres.arcs) {
      if (a.hi != beta) continue;
      const auto& y = build.column[a.lo - 1][1];
      if (!target || y > *target) target = y;
    }
    if (target) {
      auto candidate = build;
      candidate.column[beta - 1][1] = *target;
      const auto why = check_candidate(candidate);
      if (why.empty()) {
        build = std::move(candidate);
        r.last_applied = true;
      } else {
        r.blocked.push_back("last binding point: " + why);
      }
    }
  }
  const auto after = build.render();
  r.x_removed = count_axis(before, Axis::X) - count_axis(after, Axis::X);
  r.y_removed = count_axis(before, Axis::Y) - count_axis(after, Axis::Y);
  return build;
}

}  // namespace latstick
