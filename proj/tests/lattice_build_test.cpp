#include <doctest.h>

#include "latstick/fixtures.hpp"
#include "latstick/lattice_build.hpp"
#include "oracles.hpp"

using namespace latstick;

namespace {

Point3 P(Rational x, Rational y, Rational z) { return {x, y, z}; }

ComponentBuild built(const ComponentSpec& c, std::span<const CutAttachment> atts = {}) {
  return add_columns(build_arc_diagram(c.presentation, 0, classify_component(c, atts)));
}

int count_axis(const StickComplex& c, Axis a) {
  int n = 0;
  for (const auto& s : c.sticks) n += s.axis() == a;
  return n;
}

bool has_stick(const StickComplex& c, const Point3& p, const Point3& q) {
  for (const auto& s : c.sticks) {
    if (s.has_endpoint(p) && s.has_endpoint(q)) return true;
  }
  return false;
}

// Assembly with markers, before merging, as build_full prepares it.
Assembly prepared(const SpatialGraphSpec& spec) {
  std::vector<ComponentBuild> builds;
  for (std::size_t i = 0; i < spec.components.size(); ++i) {
    const auto& comp = spec.components[i];
    auto b = add_columns(build_arc_diagram(comp.presentation, static_cast<int>(i),
                                           classify_component(comp, spec.attachments)));
    builds.push_back(side_slide(std::move(b)));
  }
  auto a = assemble(build_cut_tree(spec), builds);
  for (const auto& [label, line] : a.lines) a.complex.markers[label] = line.at(line.degree() >= 3 ? 1 : 0);
  return a;
}

}  // namespace

TEST_CASE("arc diagram geometry") {
  const ArcPresentation one{{"a", std::nullopt, "b"}, {{1, 1, 2}, {2, 1, 3}, {3, 2, 3}}};
  const auto c = build_arc_diagram(one).render();
  CHECK(has_stick(c, P(1, 1, 2), P(3, 1, 2)));
  CHECK(has_stick(c, P(3, 1, 2), P(3, 3, 2)));
  CHECK(count_axis(c, Axis::X) == 3);
  CHECK(count_axis(c, Axis::Y) == 3);

  const auto u2 = build_arc_diagram(demo_fixture("unknot")->components[0].presentation).render();
  CHECK(u2.sticks.size() == 4);
  const auto th3 = build_arc_diagram(demo_fixture("theta-planar")->components[0].presentation).render();
  CHECK(th3.sticks.size() == 6);
  for (const auto& s : th3.sticks) CHECK(s.length() == 1);
}

TEST_CASE("columns") {
  const auto u2 = built(demo_fixture("unknot")->components[0]).render();
  CHECK(u2.sticks.size() == 6);
  CHECK(has_stick(u2, P(1, 1, 1), P(1, 1, 2)));
  CHECK(has_stick(u2, P(2, 2, 1), P(2, 2, 2)));

  const auto th3 = built(demo_fixture("theta-planar")->components[0]).render();
  CHECK(has_stick(th3, P(1, 1, 1), P(1, 1, 2)));
  CHECK(has_stick(th3, P(1, 1, 2), P(1, 1, 3)));

  // A degree-1 point carries no column.
  const auto arc = built(theta_chain_fixture().components[1]).render();
  CHECK(count_axis(arc, Axis::Z) == 0);
}

TEST_CASE("side slide of the unknot leaves a rectangle") {
  SlideReport rep;
  const auto b = side_slide(built(demo_fixture("unknot")->components[0]), &rep);
  const auto c = b.render();
  CHECK(rep.first_applied);
  CHECK(rep.x_removed == 2);
  CHECK(!rep.last_applied);
  CHECK(!rep.blocked.empty());
  CHECK(c.sticks.size() == 4);
  CHECK(has_stick(c, P(2, 1, 1), P(2, 1, 2)));
  CHECK(has_stick(c, P(2, 1, 1), P(2, 2, 1)));
  CHECK(has_stick(c, P(2, 1, 2), P(2, 2, 2)));
  CHECK(has_stick(c, P(2, 2, 1), P(2, 2, 2)));
}

TEST_CASE("side slide of the planar theta absorbs all x-sticks") {
  SlideReport rep;
  const auto c = side_slide(built(demo_fixture("theta-planar")->components[0]), &rep).render();
  CHECK(rep.x_removed == 3);
  CHECK(!rep.last_applied);
  CHECK(c.sticks.size() == 7);
  CHECK(count_axis(c, Axis::X) == 0);
}

TEST_CASE("side slide of the trefoil applies both moves") {
  SlideReport rep;
  const auto before = built(demo_fixture("trefoil")->components[0]).render();
  const auto c = side_slide(built(demo_fixture("trefoil")->components[0]), &rep).render();
  CHECK(rep.first_applied);
  CHECK(rep.last_applied);
  CHECK(rep.x_removed == 1);
  CHECK(rep.y_removed == 1);
  CHECK(count_axis(before, Axis::X) + count_axis(before, Axis::Y) - count_axis(c, Axis::X) -
            count_axis(c, Axis::Y) >= 2);
  CHECK(check_self_avoiding(c).empty());
}

TEST_CASE("arc components are not slid") {
  SlideReport rep;
  const auto spec = theta_chain_fixture();
  const auto b = built(spec.components[1], spec.attachments);
  const auto slid = side_slide(b, &rep);
  CHECK(slid.column == b.column);
  CHECK(!rep.first_applied);
}

TEST_CASE("composite assembly: one connector collinear with both columns") {
  const auto spec = *demo_fixture("theta-composite");
  const auto a = prepared(spec);
  CHECK(a.connectors == 1);
  const Stick* connector = nullptr;
  for (const auto& s : a.complex.sticks) {
    if (s.kind() == StickKind::Connector) connector = &s;
  }
  REQUIRE(connector);
  CHECK(connector->axis() == Axis::Z);
  const auto& line = a.lines.at("a");
  CHECK(connector->a().x() == line.axis[0]);
  CHECK(connector->a().y() == line.axis[1]);
  // Columns of both components at "a" lie on the same vertical line.
  int columns_on_line = 0;
  for (const auto& s : a.complex.sticks) {
    if (s.kind() == StickKind::Column && s.a().x() == line.axis[0] && s.a().y() == line.axis[1]) ++columns_on_line;
  }
  CHECK(columns_on_line >= 2);
  CHECK(line.degree() == 5);
  CHECK(a.frames[1].scale < 1);
  CHECK(a.frames[1].offset.z() >= 4);
}

TEST_CASE("splittable input stacks two trees with no connector") {
  SpatialGraphSpec s;
  s.components.push_back(demo_fixture("trefoil")->components[0]);
  auto th = demo_fixture("theta-planar")->components[0];
  s.components.push_back(th);
  const auto r = build_full(s);
  CHECK(r.connectors == 0);
  CHECK(oracle::lattice_self_avoiding(r.embedding));
}

TEST_CASE("stem with two branches at distinct cut vertices") {
  SpatialGraphSpec s;
  s.components.push_back({"stem", {{"a", "b"}, {{1, 1, 2}, {2, 1, 2}, {3, 1, 2}}}});
  s.components.push_back({"x", {{"a", std::nullopt}, {{1, 1, 2}, {2, 1, 2}}}});
  s.components.push_back({"y", {{std::nullopt, "b"}, {{1, 1, 2}, {2, 1, 2}}}});
  s.attachments = {{"stem", "x", "a"}, {"stem", "y", "b"}};
  REQUIRE(validate_spec(s).ok());
  const auto a = prepared(s);
  CHECK(a.connectors == 2);
  // Depth-first order gives disjoint, increasing z-ranges.
  CHECK(a.frames[1].offset.z() < a.frames[2].offset.z());
  const auto r = build_full(s);
  CHECK(oracle::lattice_self_avoiding(r.embedding));
  CHECK(r.counts.total <= r.bound.construction);
}

TEST_CASE("merge planning on a synthetic d=4 line") {
  // Vertical line at the origin, attachments at heights 1..4.
  auto line_with = [](Direction e3, bool far_horizontal) {
    StickComplex c;
    for (int z = 1; z < 4; ++z) c.sticks.emplace_back(P(0, 0, z), P(0, 0, z + 1));
    c.sticks.emplace_back(P(0, 0, 1), P(-1, 0, 1));
    c.sticks.emplace_back(P(0, 0, 2), P(1, 0, 2));
    const Point3 far = e3.vec() * Rational(2) + P(0, 0, 3);
    c.sticks.emplace_back(P(0, 0, 3), far);
    if (far_horizontal) {
      const Axis other = e3.axis == Axis::X ? Axis::Y : Axis::X;
      c.sticks.emplace_back(far, far + Direction{other, 1}.vec() * Rational(3));
    }
    c.sticks.emplace_back(P(0, 0, 4), P(0, -1, 4));
    VertexLine line{"v", {0, 0}, {1, 2, 3, 4}, 1};
    return std::make_pair(c, std::map<std::string, VertexLine>{{"v", line}});
  };

  SUBCASE("same direction as e2: perpendicular translate, +y first") {
    auto [c, lines] = line_with({Axis::X, 1}, true);
    const auto plan = plan_merges(c, lines);
    REQUIRE(plan.vertices.size() == 1);
    REQUIRE(plan.vertices[0].steps.size() == 1);
    const auto& s = plan.vertices[0].steps[0];
    CHECK(s.target == 2);
    CHECK(s.kind == MergeKind::Translate);
    CHECK(s.direction == Direction{Axis::Y, 1});
    const auto merged = apply_merges(c, plan, lines);
    CHECK(count_sticks(merged).total == count_sticks(c).total + 1);
  }
  SUBCASE("free direction: drop-down") {
    auto [c, lines] = line_with({Axis::Y, -1}, false);
    // Keep e4 out of the way.
    c.sticks.back() = Stick(P(0, 0, 4), P(-1, 0, 4));
    const auto plan = plan_merges(c, lines);
    REQUIRE(plan.vertices.size() == 1);
    const auto& s = plan.vertices[0].steps.at(0);
    CHECK(s.kind == MergeKind::DropDown);
    CHECK(s.direction == Direction{Axis::Y, -1});
    CHECK(plan.vertices[0].pivot == P(0, 0, 2));
  }
}

TEST_CASE("bouquet merges exercise the degree-6 swap") {
  const auto spec = *demo_fixture("bouquet3");
  auto a = prepared(spec);
  const auto& line = a.lines.at("v");
  CHECK(line.degree() == 6);
  // Before merging the surrogate junctions are unmarked.
  CHECK(audit_junctions(a.complex).has("unmarked junction"));

  const auto plan = plan_merges(a.complex, a.lines);
  REQUIRE(plan.vertices.size() == 1);
  const auto& steps = plan.vertices[0].steps;
  REQUIRE(steps.size() == 3);
  CHECK(steps[0].target == 2);
  CHECK(steps[1].target == 3);
  // e5 points opposite the last free direction, so z6 is merged instead.
  CHECK(steps[2].target == 5);
  std::set<Direction> used;
  for (const auto& s : steps) used.insert(s.direction);
  CHECK(used.size() == 3);
  std::set<Rational> offsets;
  for (const auto& s : steps) offsets.insert(s.offset);
  CHECK(offsets.size() == 3);

  const auto before = count_sticks(a.complex).total;
  const auto merged = apply_merges(a.complex, plan, a.lines);
  CHECK(count_sticks(merged).total - before == plan.merge_count());
  const std::map<std::string, int> deg{{"v", 6}};
  CHECK(audit_junctions(merged, &deg).ok());
}

TEST_CASE("composite vertex merges to a single marker of incidence 5") {
  const auto r = build_full(*demo_fixture("theta-composite"));
  CHECK(r.merges.merge_count() == 2);
  for (const auto& v : r.embedding.vertices) {
    if (v.id != "a") continue;
    CHECK(oracle::ends_at(r.embedding, v.position) == 5);
    CHECK(oracle::directions_at(r.embedding, v.position).size() == 5);
  }
}

TEST_CASE("straightening the bridge of a theta chain") {
  const auto spec = theta_chain_fixture();
  const auto r = build_full(spec);
  CHECK(r.straighten.straightened == 1);
  CHECK(r.straighten.sticks_saved >= 2);
  CHECK(r.straighten.warnings.empty());
  CHECK(oracle::lattice_self_avoiding(r.embedding));
  CHECK(r.counts.total <= r.bound.construction);
}

TEST_CASE("knotted arc component is left alone with a warning") {
  auto spec = theta_chain_fixture();
  spec.components[1].presentation = {{"b", std::nullopt, std::nullopt, "c"}, {{1, 1, 2}, {2, 2, 3}, {3, 3, 4}}};
  REQUIRE(validate_spec(spec).ok());
  const auto r = build_full(spec);
  CHECK(r.straighten.straightened == 0);
  REQUIRE(r.straighten.warnings.size() == 1);
  CHECK(r.straighten.warnings[0].find("3 arcs") != std::string::npos);
}

TEST_CASE("no arc components: straightening is the identity") {
  const auto r = build_full(*demo_fixture("theta-composite"));
  CHECK(r.straighten.straightened == 0);
  CHECK(r.straighten.sticks_saved == 0);
}

TEST_CASE("normalize scales by the denominator lcm") {
  StickComplex c;
  c.sticks.emplace_back(P(0, 0, 0), P(Rational(1, 4), 0, 0));
  c.sticks.emplace_back(P(Rational(1, 4), 0, 0), P(Rational(1, 4), 1, 0));
  auto e = normalize(c);
  CHECK(e.bbox_max == IntPoint{1, 4, 0});

  StickComplex d;
  d.sticks.emplace_back(P(0, 0, 0), P(Rational(1, 8), 0, 0));
  d.sticks.emplace_back(P(0, 1, 0), P(Rational(1, 64), 1, 0));
  e = normalize(d);
  CHECK(e.bbox_max == IntPoint{8, 64, 0});

  StickComplex shifted;
  shifted.sticks.emplace_back(P(3, 5, 7), P(4, 5, 7));
  e = normalize(shifted);
  CHECK(e.sticks[0].start == IntPoint{0, 0, 0});
  CHECK(e.sticks[0].end == IntPoint{1, 0, 0});
}

TEST_CASE("full pipeline on the fixtures") {
  const auto u = build_full(*demo_fixture("unknot"));
  CHECK(u.counts.total == 4);
  const auto t = build_full(*demo_fixture("trefoil"));
  CHECK(t.counts.total >= 12);
  CHECK(t.counts.total <= 13);
  const auto f = build_full(*demo_fixture("figure8"));
  CHECK(f.counts.total >= 14);
  CHECK(f.counts.total <= 16);
  const auto th = build_full(*demo_fixture("theta-planar"));
  CHECK(th.counts.total == 7);
  CHECK(oracle::coplanar(th.embedding));

  for (const auto& name : demo_names()) {
    CAPTURE(name);
    const auto r = build_full(*demo_fixture(name));
    CHECK(oracle::lattice_self_avoiding(r.embedding));
    CHECK(oracle::polyline_stick_count(r.embedding) == r.counts.total);
    CHECK(static_cast<int>(r.embedding.sticks.size()) == r.counts.total);
    for (const auto& v : r.embedding.vertices) {
      const auto d = r.census.degrees.at(v.id);
      CHECK(oracle::ends_at(r.embedding, v.position) == d);
      CHECK(static_cast<int>(oracle::directions_at(r.embedding, v.position).size()) == d);
    }
  }
}

TEST_CASE("degree seven input is rejected") {
  SpatialGraphSpec s;
  ArcPresentation p{{"a", "b"}, {}};
  for (int i = 1; i <= 7; ++i) p.arcs.push_back({i, 1, 2});
  s.components.push_back({"t", p});
  try {
    build_full(s);
    FAIL("expected InvalidSpec");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidSpec);
    CHECK(std::string(e.what()).find("degree") != std::string::npos);
  }
}
