#include "latstick/geometry_validate.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "latstick/bounds.hpp"

namespace latstick {

namespace {

std::string str(const Point3& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

}  // namespace

std::vector<StickContact> check_self_avoiding(const StickComplex& complex) {
  std::vector<StickContact> out;
  const auto& s = complex.sticks;
  const int n = static_cast<int>(s.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Point3 lo;
      Point3 hi;
      bool disjoint = false;
      bool degenerate = true;
      for (int c = 0; c < 3 && !disjoint; ++c) {
        lo[c] = std::max(s[i].a()[c], s[j].a()[c]);
        hi[c] = std::min(s[i].b()[c], s[j].b()[c]);
        if (lo[c] > hi[c]) disjoint = true;
        if (lo[c] < hi[c]) degenerate = false;
      }
      if (disjoint) continue;
      if (!degenerate) {
        out.push_back({i, j, "collinear overlap", lo});
        continue;
      }
      const bool end_i = s[i].has_endpoint(lo);
      const bool end_j = s[j].has_endpoint(lo);
      if (end_i && end_j) continue;
      out.push_back({i, j, (end_i || end_j) ? "T-contact" : "crossing", lo});
    }
  }
  return out;
}

ValidationReport audit_junctions(const StickComplex& complex, const std::map<std::string, int>* expected_degrees) {
  ValidationReport report;
  std::map<Point3, int> ends;
  for (const auto& st : complex.sticks) {
    ++ends[st.a()];
    ++ends[st.b()];
  }
  std::map<Point3, std::string> marked;
  for (const auto& [label, p] : complex.markers) {
    marked[p] = label;
    const auto it = ends.find(p);
    if (it == ends.end()) {
      const bool interior = std::any_of(complex.sticks.begin(), complex.sticks.end(),
                                        [&](const Stick& st) { return st.contains(p); });
      report.add(interior ? "marker interior" : "marker off complex",
                 "vertex '" + label + "' at " + str(p) + (interior ? " lies inside a stick" : " touches no stick"));
      continue;
    }
    if (expected_degrees) {
      const auto d = expected_degrees->find(label);
      if (d == expected_degrees->end()) {
        report.add("unknown vertex", "marker '" + label + "' is not a vertex of the graph");
      } else if (d->second != it->second) {
        report.add("marker incidence", "vertex '" + label + "' has " + std::to_string(it->second) +
                                           " incident sticks, expected " + std::to_string(d->second));
      }
    }
  }
  if (expected_degrees) {
    for (const auto& [label, d] : *expected_degrees) {
      if (!complex.markers.count(label)) report.add("missing vertex", "vertex '" + label + "' has no marker");
    }
  }
  for (const auto& [p, count] : ends) {
    if (marked.count(p)) continue;
    if (count >= 3) {
      report.add("unmarked junction", std::to_string(count) + " stick ends meet at " + str(p));
    } else if (count == 1) {
      report.add("dangling end", "stick end at " + str(p) + " joins nothing");
    }
  }
  return report;
}

ReconstructedGraph reconstruct_graph(const StickComplex& complex) {
  ReconstructedGraph g;
  std::map<Point3, std::vector<int>> ends;
  for (int i = 0; i < static_cast<int>(complex.sticks.size()); ++i) {
    ends[complex.sticks[i].a()].push_back(i);
    ends[complex.sticks[i].b()].push_back(i);
  }
  std::vector<bool> used(complex.sticks.size(), false);
  for (const auto& [label, p] : complex.markers) {
    g.vertices.push_back(label);
    for (int first : ends[p]) {
      if (used[first]) continue;
      TracedEdge e;
      e.from = label;
      std::vector<Point3> pts{p};
      Point3 cur = p;
      int st = first;
      while (true) {
        used[st] = true;
        e.sticks.push_back(st);
        cur = complex.sticks[st].other_end(cur);
        pts.push_back(cur);
        if (auto m = complex.marker_at(cur)) {
          e.to = *m;
          break;
        }
        const auto& here = ends[cur];
        if (here.size() != 2) {
          throw Error(ErrorCode::ReconstructionMismatch,
                      "path from '" + label + "' reaches unmarked point " + str(cur) + " with " +
                          std::to_string(here.size()) + " stick ends");
        }
        st = here[0] == st ? here[1] : here[0];
        if (used[st]) {
          throw Error(ErrorCode::ReconstructionMismatch, "path from '" + label + "' re-enters a used stick");
        }
      }
      // Keep only bends.
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i == 0 || i + 1 == pts.size()) {
          e.polyline.push_back(pts[i]);
          continue;
        }
        const auto d1 = pts[i] - pts[i - 1];
        const auto d2 = pts[i + 1] - pts[i];
        int a1 = 0;
        int a2 = 0;
        for (int c = 0; c < 3; ++c) {
          if (d1[c] != 0) a1 = c;
          if (d2[c] != 0) a2 = c;
        }
        if (a1 != a2) e.polyline.push_back(pts[i]);
      }
      for (int idx : e.sticks) {
        if (complex.sticks[idx].kind() == StickKind::Arc && complex.sticks[idx].owner() >= 0) {
          e.owner = complex.sticks[idx].owner();
          break;
        }
      }
      if (e.owner < 0) {
        for (int idx : e.sticks) {
          if (complex.sticks[idx].owner() >= 0) {
            e.owner = complex.sticks[idx].owner();
            break;
          }
        }
      }
      g.edges.push_back(std::move(e));
    }
  }
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (!used[i]) {
      throw Error(ErrorCode::ReconstructionMismatch,
                  "stick " + str(complex.sticks[i].a()) + " -- " + str(complex.sticks[i].b()) +
                      " is not on any vertex-to-vertex path");
    }
  }
  return g;
}

ValidationReport compare_graph(const ReconstructedGraph& graph, const SpatialGraphSpec& spec) {
  ValidationReport report;
  const auto c = census(spec);
  std::set<std::string> expected_vertices;
  for (const auto& [label, d] : c.degrees) expected_vertices.insert(label);
  const std::set<std::string> got_vertices(graph.vertices.begin(), graph.vertices.end());
  for (const auto& v : expected_vertices) {
    if (!got_vertices.count(v)) report.add("missing vertex", "vertex '" + v + "' absent from embedding");
  }
  for (const auto& v : got_vertices) {
    if (!expected_vertices.count(v)) report.add("extra vertex", "embedding has unexpected vertex '" + v + "'");
  }

  std::map<std::pair<std::string, std::string>, int> diff;
  auto key = [](std::string a, std::string b) {
    if (b < a) std::swap(a, b);
    return std::make_pair(a, b);
  };
  for (const auto& comp : spec.components) {
    for (const auto& e : derive_edges(comp)) ++diff[key(e.from, e.to)];
  }
  for (const auto& e : graph.edges) --diff[key(e.from, e.to)];
  for (const auto& [k, n] : diff) {
    if (n > 0) {
      report.add("missing edge", std::to_string(n) + " edge(s) " + k.first + "--" + k.second + " missing");
    } else if (n < 0) {
      report.add("extra edge", std::to_string(-n) + " unexpected edge(s) " + k.first + "--" + k.second);
    }
  }
  return report;
}

StickCounts count_sticks(const StickComplex& complex) {
  StickCounts counts;
  for (const auto& st : fuse_collinear(complex).sticks) {
    switch (st.axis()) {
      case Axis::X: ++counts.x; break;
      case Axis::Y: ++counts.y; break;
      case Axis::Z: ++counts.z; break;
    }
  }
  counts.total = counts.x + counts.y + counts.z;
  return counts;
}

BoundReport evaluate_bound(const StickCounts& counts, const GraphCensus& census,
                           std::optional<int> declared_crossings) {
  BoundReport r;
  r.total = counts.total;
  r.construction = construction_count(census.alpha_total, census.e, census.v, census.s, census.k);
  if (declared_crossings) {
    const auto c = *declared_crossings;
    r.theorem = main_upper(c, census.e, census.v, census.s, census.b, census.k);
    r.arc_witness_within_bound = census.alpha_total <= arc_index_upper(c, census.e, census.b);
  }
  return r;
}

BoundReport check_bound(const StickCounts& counts, const GraphCensus& census,
                        std::optional<int> declared_crossings) {
  auto r = evaluate_bound(counts, census, declared_crossings);
  if (!r.ok()) {
    std::string msg = "stick count " + std::to_string(r.total) + " exceeds construction bound " +
                      std::to_string(r.construction);
    if (r.theorem) msg += " or crossing bound " + std::to_string(*r.theorem);
    throw Error(ErrorCode::BoundViolated, msg);
  }
  return r;
}

AuditReport audit(const StickComplex& complex, const SpatialGraphSpec& spec) {
  AuditReport r;
  r.violations = check_self_avoiding(complex);
  r.self_avoiding = r.violations.empty();
  const auto c = census(spec);
  r.junction_issues = audit_junctions(complex, &c.degrees);
  std::map<Point3, int> ends;
  for (const auto& st : complex.sticks) {
    ++ends[st.a()];
    ++ends[st.b()];
  }
  for (const auto& [p, n] : ends) {
    if (n >= 3 && !complex.marker_at(p)) r.unmarked_junctions.push_back(p);
  }
  try {
    const auto g = reconstruct_graph(complex);
    r.reconstruction_issues = compare_graph(g, spec);
  } catch (const Error& e) {
    r.reconstruction_issues.add("reconstruction", e.what());
  }
  r.reconstruction_ok = r.reconstruction_issues.ok();
  r.counts = count_sticks(complex);
  return r;
}

}  // namespace latstick
