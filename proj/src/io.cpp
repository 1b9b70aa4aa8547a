#include "latstick/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace latstick {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

const json& object(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(where + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }) == allowed.end()) {
      fail(where + ": unknown key '" + key + "'");
    }
  }
  return j;
}

const json& field(const json& j, const char* key, const std::string& where) {
  const auto it = j.find(key);
  if (it == j.end()) fail(where + ": missing '" + key + "'");
  return *it;
}

const json& array(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where + ": expected an array");
  return j;
}

std::string string_of(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where + ": expected a string");
  return j.get<std::string>();
}

std::int64_t int_of(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where + ": expected an integer");
  return j.get<std::int64_t>();
}

int small_int(const json& j, const std::string& where) {
  const auto v = int_of(j, where);
  if (v < -1'000'000 || v > 1'000'000) fail(where + ": value out of range");
  return static_cast<int>(v);
}

IntPoint point_of(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) fail(where + ": expected [x, y, z]");
  return {int_of(j[0], where), int_of(j[1], where), int_of(j[2], where)};
}

json point_json(const IntPoint& p) { return json::array({p[0], p[1], p[2]}); }

Axis axis_of(const std::string& s, const std::string& where) {
  if (s == "x") return Axis::X;
  if (s == "y") return Axis::Y;
  if (s == "z") return Axis::Z;
  fail(where + ": axis must be \"x\", \"y\" or \"z\"");
}

std::string axis_str(Axis a) { return std::string(1, static_cast<char>('x' + static_cast<int>(a))); }

}  // namespace

SpatialGraphSpec parse_input(const json& doc) {
  object(doc, "input", {"components", "attachments", "diagram_crossings"});
  SpatialGraphSpec spec;
  const auto& comps = array(field(doc, "components", "input"), "components");
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const std::string where = "components[" + std::to_string(ci) + "]";
    const auto& c = object(comps[ci], where, {"id", "binding_points", "arcs"});
    ComponentSpec out;
    out.id = string_of(field(c, "id", where), where + ".id");
    const auto& bps = array(field(c, "binding_points", where), where + ".binding_points");
    out.presentation.labels.assign(bps.size(), std::nullopt);
    std::vector<bool> seen(bps.size(), false);
    for (std::size_t i = 0; i < bps.size(); ++i) {
      const std::string w = where + ".binding_points[" + std::to_string(i) + "]";
      const auto& bp = object(bps[i], w, {"index", "vertex"});
      const int index = small_int(field(bp, "index", w), w + ".index");
      if (index < 1 || index > static_cast<int>(bps.size()) || seen[index - 1]) {
        fail(w + ": indices must be 1.." + std::to_string(bps.size()) + ", each once");
      }
      seen[index - 1] = true;
      if (bp.contains("vertex")) out.presentation.labels[index - 1] = string_of(bp["vertex"], w + ".vertex");
    }
    const auto& arcs = array(field(c, "arcs", where), where + ".arcs");
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const std::string w = where + ".arcs[" + std::to_string(i) + "]";
      const auto& a = object(arcs[i], w, {"page", "from", "to"});
      const int page = small_int(field(a, "page", w), w + ".page");
      const int from = small_int(field(a, "from", w), w + ".from");
      const int to = small_int(field(a, "to", w), w + ".to");
      out.presentation.arcs.push_back({page, std::min(from, to), std::max(from, to)});
    }
    spec.components.push_back(std::move(out));
  }
  if (doc.contains("attachments")) {
    const auto& atts = array(doc["attachments"], "attachments");
    for (std::size_t i = 0; i < atts.size(); ++i) {
      const std::string w = "attachments[" + std::to_string(i) + "]";
      const auto& a = object(atts[i], w, {"stem", "branch", "cut_vertex"});
      spec.attachments.push_back({string_of(field(a, "stem", w), w + ".stem"),
                                  string_of(field(a, "branch", w), w + ".branch"),
                                  string_of(field(a, "cut_vertex", w), w + ".cut_vertex")});
    }
  }
  if (doc.contains("diagram_crossings") && !doc["diagram_crossings"].is_null()) {
    const int c = small_int(doc["diagram_crossings"], "diagram_crossings");
    if (c < 0) fail("diagram_crossings: must be nonnegative");
    spec.declared_crossings = c;
  }
  return spec;
}

json input_to_json(const SpatialGraphSpec& spec) {
  json doc;
  doc["components"] = json::array();
  for (const auto& c : spec.components) {
    json comp{{"id", c.id}, {"binding_points", json::array()}, {"arcs", json::array()}};
    for (int bp = 1; bp <= c.presentation.beta(); ++bp) {
      json b{{"index", bp}};
      if (const auto& l = c.presentation.label(bp)) b["vertex"] = *l;
      comp["binding_points"].push_back(b);
    }
    for (const auto& a : c.presentation.arcs) comp["arcs"].push_back({{"page", a.page}, {"from", a.lo}, {"to", a.hi}});
    doc["components"].push_back(comp);
  }
  doc["attachments"] = json::array();
  for (const auto& a : spec.attachments) {
    doc["attachments"].push_back({{"stem", a.stem}, {"branch", a.branch}, {"cut_vertex", a.cut_vertex}});
  }
  if (spec.declared_crossings) doc["diagram_crossings"] = *spec.declared_crossings;
  return doc;
}

json embedding_to_json(const LatticeEmbedding& emb, const StickCounts& counts, const BoundReport* bound) {
  json doc;
  doc["sticks"] = json::array();
  for (const auto& s : emb.sticks) {
    doc["sticks"].push_back({{"axis", axis_str(s.axis)}, {"start", point_json(s.start)}, {"end", point_json(s.end)}});
  }
  doc["vertices"] = json::array();
  for (const auto& v : emb.vertices) doc["vertices"].push_back({{"id", v.id}, {"position", point_json(v.position)}});
  doc["edges"] = json::array();
  for (const auto& e : emb.edges) {
    json edge{{"id", e.id}, {"from", e.from}, {"to", e.to}, {"polyline", json::array()}};
    if (!e.component.empty()) edge["component"] = e.component;
    for (const auto& p : e.polyline) edge["polyline"].push_back(point_json(p));
    doc["edges"].push_back(edge);
  }
  doc["counts"] = {{"x", counts.x}, {"y", counts.y}, {"z", counts.z}, {"total", counts.total}};
  json br = json::object();
  if (bound) {
    br["total"] = bound->total;
    br["construction"] = bound->construction;
    br["theorem"] = bound->theorem ? json(*bound->theorem) : json(nullptr);
    br["theorem_applies"] = bound->arc_witness_within_bound;
    br["ok"] = bound->ok();
  }
  doc["bounds_report"] = br;
  return doc;
}

LatticeEmbedding parse_embedding(const json& doc) {
  object(doc, "embedding", {"sticks", "vertices", "edges", "counts", "bounds_report"});
  LatticeEmbedding emb;
  const auto& sticks = array(field(doc, "sticks", "embedding"), "sticks");
  for (std::size_t i = 0; i < sticks.size(); ++i) {
    const std::string w = "sticks[" + std::to_string(i) + "]";
    const auto& s = object(sticks[i], w, {"axis", "start", "end"});
    LatticeStick st;
    st.axis = axis_of(string_of(field(s, "axis", w), w + ".axis"), w);
    st.start = point_of(field(s, "start", w), w + ".start");
    st.end = point_of(field(s, "end", w), w + ".end");
    emb.sticks.push_back(st);
  }
  const auto& verts = array(field(doc, "vertices", "embedding"), "vertices");
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const std::string w = "vertices[" + std::to_string(i) + "]";
    const auto& v = object(verts[i], w, {"id", "position"});
    emb.vertices.push_back({string_of(field(v, "id", w), w + ".id"), point_of(field(v, "position", w), w)});
  }
  const auto& edges = array(field(doc, "edges", "embedding"), "edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string w = "edges[" + std::to_string(i) + "]";
    const auto& e = object(edges[i], w, {"id", "polyline", "from", "to", "component"});
    LatticeEdge out;
    out.id = string_of(field(e, "id", w), w + ".id");
    if (e.contains("from")) out.from = string_of(e["from"], w + ".from");
    if (e.contains("to")) out.to = string_of(e["to"], w + ".to");
    if (e.contains("component")) out.component = string_of(e["component"], w + ".component");
    const auto& poly = array(field(e, "polyline", w), w + ".polyline");
    for (std::size_t k = 0; k < poly.size(); ++k) out.polyline.push_back(point_of(poly[k], w + ".polyline"));
    emb.edges.push_back(std::move(out));
  }
  for (const auto& s : emb.sticks) {
    for (int i = 0; i < 3; ++i) emb.bbox_max[i] = std::max({emb.bbox_max[i], s.start[i], s.end[i]});
  }
  return emb;
}

ValidationReport check_consistency(const LatticeEmbedding& emb) {
  ValidationReport r;
  using Line = std::tuple<int, std::int64_t, std::int64_t>;
  using Intervals = std::vector<std::pair<std::int64_t, std::int64_t>>;
  auto line_of = [](int axis, const IntPoint& p) {
    const int u = (axis + 1) % 3;
    const int v = (axis + 2) % 3;
    return Line{axis, p[u], p[v]};
  };
  std::map<Line, Intervals> from_sticks;
  std::map<Line, Intervals> from_edges;
  for (std::size_t i = 0; i < emb.sticks.size(); ++i) {
    const auto& s = emb.sticks[i];
    const int a = static_cast<int>(s.axis);
    int differing = 0;
    for (int c = 0; c < 3; ++c) differing += s.start[c] != s.end[c];
    if (differing != 1 || s.start[a] == s.end[a]) {
      r.add("stick axis", "stick " + std::to_string(i) + " is not a nonzero " + axis_str(s.axis) + "-stick");
      continue;
    }
    if (!(s.start < s.end)) r.add("stick order", "stick " + std::to_string(i) + " has start after end");
    from_sticks[line_of(a, s.start)].push_back(std::minmax(s.start[a], s.end[a]));
  }
  std::map<std::string, IntPoint> where;
  for (const auto& v : emb.vertices) where[v.id] = v.position;
  for (const auto& e : emb.edges) {
    if (e.polyline.size() < 2) {
      r.add("polyline", "edge " + e.id + " has fewer than two points");
      continue;
    }
    for (const auto& [label, end] : {std::pair{e.from, e.polyline.front()}, std::pair{e.to, e.polyline.back()}}) {
      if (label.empty()) continue;
      const auto it = where.find(label);
      if (it == where.end() || it->second != end) {
        r.add("polyline", "edge " + e.id + " does not end at vertex '" + label + "'");
      }
    }
    for (std::size_t k = 0; k + 1 < e.polyline.size(); ++k) {
      const auto& p = e.polyline[k];
      const auto& q = e.polyline[k + 1];
      int axis = -1;
      int differing = 0;
      for (int c = 0; c < 3; ++c) {
        if (p[c] != q[c]) {
          ++differing;
          axis = c;
        }
      }
      if (differing != 1) {
        r.add("polyline", "edge " + e.id + " has a segment that is not axis-parallel");
        continue;
      }
      from_edges[line_of(axis, p)].push_back(std::minmax(p[axis], q[axis]));
    }
  }
  auto merged = [](Intervals v) {
    std::sort(v.begin(), v.end());
    Intervals out;
    for (const auto& iv : v) {
      if (!out.empty() && iv.first <= out.back().second) out.back().second = std::max(out.back().second, iv.second);
      else out.push_back(iv);
    }
    return out;
  };
  std::set<Line> lines;
  for (const auto& [l, v] : from_sticks) lines.insert(l);
  for (const auto& [l, v] : from_edges) lines.insert(l);
  for (const auto& l : lines) {
    if (merged(from_sticks[l]) != merged(from_edges[l])) {
      r.add("coverage", "sticks and edge polylines disagree on an " + axis_str(static_cast<Axis>(std::get<0>(l))) +
                            "-line");
    }
  }
  return r;
}

std::string to_obj(const LatticeEmbedding& emb) {
  std::map<IntPoint, int> index;
  std::ostringstream vs;
  std::ostringstream ls;
  auto id = [&](const IntPoint& p) {
    const auto [it, fresh] = index.try_emplace(p, static_cast<int>(index.size()) + 1);
    if (fresh) vs << "v " << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
    return it->second;
  };
  for (const auto& s : emb.sticks) {
    const int a = id(s.start);
    const int b = id(s.end);
    ls << "l " << a << ' ' << b << '\n';
  }
  return vs.str() + ls.str();
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  out << text;
}

}  // namespace latstick
