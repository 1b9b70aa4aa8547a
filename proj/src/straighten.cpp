#include "latstick/lattice_build.hpp"

#include <algorithm>
#include <set>

namespace latstick {

namespace {

bool is_horizontal(const Stick& s) { return s.axis() != Axis::Z; }

}  // namespace

StickComplex straighten_arcs(StickComplex complex, const SpatialGraphSpec& spec, const CutTree& tree,
                             StraightenReport* report) {
  StraightenReport local;
  StraightenReport& rep = report ? *report : local;

  for (std::size_t pos = 0; pos < tree.nodes.size(); ++pos) {
    const auto& node = tree.nodes[pos];
    const auto& comp = spec.components[node.component];
    if (classify_component(comp, spec.attachments).kind != ComponentKind::Arc) continue;
    if (node.stem < 0) continue;
    const std::string& id = comp.id;
    if (comp.presentation.alpha() != 1) {
      rep.warnings.push_back("arc component '" + id + "' has " + std::to_string(comp.presentation.alpha()) +
                             " arcs; not straightened");
      continue;
    }

    // A: top of the connector into this component; B: far end of the arc path.
    std::optional<Point3> a;
    for (const auto& st : complex.sticks) {
      if (st.kind() == StickKind::Connector && st.owner() == node.component) a = st.b();
    }
    if (!a) {
      rep.warnings.push_back("arc component '" + id + "': no connector found; not straightened");
      continue;
    }
    std::vector<int> path;
    Point3 b = *a;
    bool ok = true;
    while (ok) {
      std::optional<int> next;
      for (int i : complex.incident(b)) {
        const auto& st = complex.sticks[i];
        if (st.kind() == StickKind::Arc && st.owner() == node.component &&
            std::find(path.begin(), path.end(), i) == path.end()) {
          if (next) ok = false;
          next = i;
        }
      }
      if (!next) break;
      if (!is_horizontal(complex.sticks[*next])) ok = false;
      path.push_back(*next);
      b = complex.sticks[*next].other_end(b);
    }
    if (!ok || path.empty() || b.z() != a->z()) {
      rep.warnings.push_back("arc component '" + id + "' is not a flat arc above its connector; not straightened");
      continue;
    }

    // Everything hanging off the far vertex moves with it.
    std::set<int> owners;
    for (int p = static_cast<int>(pos) + 1; p < node.subtree_end; ++p) owners.insert(tree.nodes[p].component);
    std::set<std::string> outside;
    for (std::size_t c = 0; c < spec.components.size(); ++c) {
      if (owners.count(static_cast<int>(c))) continue;
      for (const auto& l : spec.components[c].presentation.labels) {
        if (l) outside.insert(*l);
      }
    }
    std::optional<std::string> far_label;
    for (const auto& l : comp.presentation.labels) {
      if (l && *l != node.cut_vertex) far_label = *l;
    }

    const Point3 shift = *a - b;
    StickComplex trial;
    for (int i = 0; i < static_cast<int>(complex.sticks.size()); ++i) {
      if (std::find(path.begin(), path.end(), i) != path.end()) continue;
      const auto& st = complex.sticks[i];
      if (owners.count(st.owner())) {
        trial.sticks.emplace_back(st.a() + shift, st.b() + shift, st.kind(), st.owner());
      } else {
        trial.sticks.push_back(st);
      }
    }
    for (const auto& [label, p] : complex.markers) {
      const bool moves = (far_label && label == *far_label) || !outside.count(label);
      trial.markers[label] = moves ? p + shift : p;
    }
    if (!check_self_avoiding(trial).empty()) {
      rep.warnings.push_back("straightening arc component '" + id + "' would collide; skipped");
      continue;
    }
    rep.sticks_saved += count_sticks(complex).total - count_sticks(trial).total;
    ++rep.straightened;
    complex = std::move(trial);
  }
  return complex;
}

}  // namespace latstick
