#include "latstick/lattice_build.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>

#include <boost/integer/common_factor.hpp>

namespace latstick {

namespace {

std::int64_t to_int64(const Rational& r) {
  if (denominator(r) != 1) throw std::logic_error("coordinate not integral after scaling");
  const BigInt n = numerator(r);
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::TooLarge, "normalized coordinate does not fit in 64 bits");
  }
  return n.convert_to<std::int64_t>();
}

IntPoint to_int(const Point3& p) { return {to_int64(p.x()), to_int64(p.y()), to_int64(p.z())}; }

std::string join(const ValidationReport& r) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.violations.size(); ++i) {
    if (i) os << "; ";
    os << r.violations[i].code << ": " << r.violations[i].message;
  }
  return os.str();
}

}  // namespace

LatticeEmbedding normalize(const StickComplex& complex, const SpatialGraphSpec* spec) {
  BigInt scale = 1;
  auto absorb = [&](const Point3& p) {
    for (int i = 0; i < 3; ++i) scale = boost::integer::lcm(scale, BigInt(denominator(p[i])));
  };
  for (const auto& st : complex.sticks) {
    absorb(st.a());
    absorb(st.b());
  }
  for (const auto& [label, p] : complex.markers) absorb(p);

  std::optional<Point3> lo;
  auto lower = [&](const Point3& p) {
    if (!lo) {
      lo = p;
      return;
    }
    for (int i = 0; i < 3; ++i) (*lo)[i] = std::min((*lo)[i], p[i]);
  };
  for (const auto& st : complex.sticks) lower(st.a());
  for (const auto& [label, p] : complex.markers) lower(p);
  const Point3 origin = lo.value_or(Point3());
  const Rational k(scale);
  auto map = [&](const Point3& p) { return (p - origin) * k; };

  StickComplex scaled;
  for (const auto& st : complex.sticks) scaled.sticks.emplace_back(map(st.a()), map(st.b()), st.kind(), st.owner());
  for (const auto& [label, p] : complex.markers) scaled.markers[label] = map(p);
  scaled = fuse_collinear(scaled);

  LatticeEmbedding emb;
  for (const auto& st : scaled.sticks) {
    const auto a = to_int(st.a());
    const auto b = to_int(st.b());
    emb.sticks.push_back({st.axis(), a, b});
    for (int i = 0; i < 3; ++i) emb.bbox_max[i] = std::max({emb.bbox_max[i], a[i], b[i]});
  }
  std::sort(emb.sticks.begin(), emb.sticks.end(), [](const LatticeStick& x, const LatticeStick& y) {
    return std::tie(x.start, x.end) < std::tie(y.start, y.end);
  });
  for (const auto& [label, p] : scaled.markers) emb.vertices.push_back({label, to_int(p)});

  if (scaled.markers.empty()) return emb;
  const auto graph = reconstruct_graph(scaled);
  int n = 0;
  for (const auto& e : graph.edges) {
    LatticeEdge out;
    out.id = "e" + std::to_string(++n);
    if (spec && e.owner >= 0 && e.owner < static_cast<int>(spec->components.size())) {
      out.component = spec->components[e.owner].id;
    }
    out.from = e.from;
    out.to = e.to;
    for (const auto& p : e.polyline) out.polyline.push_back(to_int(p));
    emb.edges.push_back(std::move(out));
  }
  return emb;
}

BuildResult build_full(const SpatialGraphSpec& spec) {
  const auto report = validate_spec(spec);
  if (!report.ok()) {
    const auto code = report.has("no valid root") ? ErrorCode::NoValidRoot : ErrorCode::InvalidSpec;
    throw Error(code, join(report));
  }
  BuildResult out;
  out.tree = build_cut_tree(spec);
  out.census = census(spec);

  std::vector<ComponentBuild> builds;
  out.slides.resize(spec.components.size());
  for (std::size_t i = 0; i < spec.components.size(); ++i) {
    const auto& comp = spec.components[i];
    const auto cls = classify_component(comp, spec.attachments);
    auto b = add_columns(build_arc_diagram(comp.presentation, static_cast<int>(i), cls));
    if (cls.kind == ComponentKind::Knot) {
      for (const auto& l : comp.presentation.labels) {
        if (l) b.knot_vertex = *l;
      }
    }
    builds.push_back(side_slide(std::move(b), &out.slides[i]));
  }

  // One full realization for a choice of branch turns; throws on failure.
  struct Attempt {
    StickComplex complex;
    int connectors = 0;
    MergePlan merges;
    StraightenReport straighten;
    StickCounts counts;
  };
  auto realize = [&](const std::vector<int>& turns) {
    Attempt a;
    auto assembly = assemble(out.tree, builds, turns);
    a.connectors = assembly.connectors;
    auto& complex = assembly.complex;
    for (const auto& [label, line] : assembly.lines) {
      if (complex.markers.count(label)) continue;
      complex.markers[label] = line.at(line.degree() >= 3 ? 1 : 0);
    }
    a.merges = plan_merges(complex, assembly.lines);
    complex = apply_merges(std::move(complex), a.merges, assembly.lines);
    complex = straighten_arcs(std::move(complex), spec, out.tree, &a.straighten);

    const auto audited = audit(complex, spec);
    if (!audited.self_avoiding) {
      std::ostringstream os;
      os << "final complex has " << audited.violations.size() << " contacts, first "
         << audited.violations.front().kind << " at " << audited.violations.front().where;
      throw Error(ErrorCode::AssemblyCollision, os.str());
    }
    if (!audited.junction_issues.ok() || !audited.reconstruction_ok) {
      auto all = audited.junction_issues;
      all.merge(audited.reconstruction_issues);
      throw Error(ErrorCode::ReconstructionMismatch, join(all));
    }
    a.counts = audited.counts;
    a.complex = std::move(complex);
    return a;
  };

  std::vector<int> turns(out.tree.nodes.size(), 0);
  std::optional<Attempt> best;
  std::optional<Error> first_error;
  try {
    best = realize(turns);
  } catch (const Error& e) {
    first_error = e;
  }
  for (std::size_t pos = 0; pos < out.tree.nodes.size(); ++pos) {
    if (out.tree.nodes[pos].stem < 0) continue;
    for (int t = 1; t < 4; ++t) {
      auto trial = turns;
      trial[pos] = t;
      try {
        auto a = realize(trial);
        if (!best || a.counts.total < best->counts.total) {
          best = std::move(a);
          turns = trial;
        }
      } catch (const Error&) {
      }
    }
  }
  if (!best) throw *first_error;

  out.turns = turns;
  out.connectors = std::move(best->connectors);
  out.merges = std::move(best->merges);
  out.straighten = std::move(best->straighten);
  auto& complex = best->complex;
  const auto& audited = best->counts;
  out.counts = audited;
  out.bound = check_bound(out.counts, out.census, spec.declared_crossings);
  out.embedding = normalize(complex, &spec);
  out.complex = std::move(complex);
  return out;
}

}  // namespace latstick
