#include "latstick/graph_model.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace latstick {

int SpatialGraphSpec::component_index(const std::string& id) const {
  for (int i = 0; i < static_cast<int>(components.size()); ++i) {
    if (components[i].id == id) return i;
  }
  return -1;
}

int CutTree::position_of(int component) const {
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    if (nodes[i].component == component) return i;
  }
  return -1;
}

std::string to_string(const ComponentClass& c) {
  switch (c.kind) {
    case ComponentKind::Arc: return "arc";
    case ComponentKind::ThetaN: return "theta" + std::to_string(c.n);
    case ComponentKind::Bouquet: return "bouquet" + std::to_string(c.n);
    case ComponentKind::Knot: return "knot";
    case ComponentKind::General: return "general";
  }
  return "?";
}

std::vector<EdgeTrace> derive_edges(const ComponentSpec& component) {
  return trace_edges(component.presentation);
}

int component_degree(const ComponentSpec& component, const std::string& vertex) {
  const auto bp = component.presentation.binding_of(vertex);
  if (!bp) return 0;
  return binding_degrees(component.presentation)[*bp];
}

ComponentClass classify_component(const ComponentSpec& component,
                                  std::span<const CutAttachment> attachments) {
  const auto edges = derive_edges(component);
  const int v = component.presentation.labeled_count();
  const int e = static_cast<int>(edges.size());
  const bool all_loops = std::all_of(edges.begin(), edges.end(),
                                     [](const EdgeTrace& t) { return t.from == t.to; });
  if (e == 1 && !all_loops) return {ComponentKind::Arc, 1};
  if (v == 1 && all_loops) {
    const bool attached = std::any_of(attachments.begin(), attachments.end(), [&](const CutAttachment& a) {
      return a.stem == component.id || a.branch == component.id;
    });
    if (e == 1 && !attached) return {ComponentKind::Knot, 1};
    return {ComponentKind::Bouquet, e};
  }
  if (v == 2 && e >= 2) {
    const bool parallel = std::none_of(edges.begin(), edges.end(),
                                       [](const EdgeTrace& t) { return t.from == t.to; });
    if (parallel) return {ComponentKind::ThetaN, e};
  }
  return {ComponentKind::General, 0};
}

namespace {

struct Link {
  int other;
  std::string label;
};

std::vector<std::vector<Link>> adjacency(const SpatialGraphSpec& spec) {
  std::vector<std::vector<Link>> adj(spec.components.size());
  for (const auto& a : spec.attachments) {
    const int s = spec.component_index(a.stem);
    const int b = spec.component_index(a.branch);
    if (s < 0 || b < 0) continue;
    adj[s].push_back({b, a.cut_vertex});
    adj[b].push_back({s, a.cut_vertex});
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end(), [](const Link& l, const Link& r) { return l.other < r.other; });
  }
  return adj;
}

}  // namespace

CutTree build_cut_tree(const SpatialGraphSpec& spec) {
  const int n = static_cast<int>(spec.components.size());
  const auto adj = adjacency(spec);

  std::vector<int> tree_of(n, -1);
  std::vector<std::vector<int>> trees;
  for (int i = 0; i < n; ++i) {
    if (tree_of[i] >= 0) continue;
    std::vector<int> members{i};
    tree_of[i] = static_cast<int>(trees.size());
    for (std::size_t q = 0; q < members.size(); ++q) {
      for (const auto& l : adj[members[q]]) {
        if (tree_of[l.other] < 0) {
          tree_of[l.other] = tree_of[i];
          members.push_back(l.other);
        }
      }
    }
    std::sort(members.begin(), members.end());
    trees.push_back(std::move(members));
  }

  std::vector<int> roots;
  for (const auto& members : trees) {
    int root = -1;
    for (int c : members) {
      if (classify_component(spec.components[c], spec.attachments).kind != ComponentKind::Arc) {
        root = c;
        break;
      }
    }
    if (root < 0) {
      throw Error(ErrorCode::NoValidRoot,
                  "every component in the tree of '" + spec.components[members.front()].id + "' is an arc");
    }
    roots.push_back(root);
  }
  std::sort(roots.begin(), roots.end());

  CutTree tree;
  std::vector<bool> seen(n, false);
  std::function<void(int, int, const std::string&)> visit = [&](int c, int stem_pos, const std::string& label) {
    seen[c] = true;
    const int pos = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back({c, stem_pos, label, {}, 0});
    if (stem_pos >= 0) tree.nodes[stem_pos].branches.push_back(pos);
    for (const auto& l : adj[c]) {
      if (!seen[l.other]) visit(l.other, pos, l.label);
    }
    tree.nodes[pos].subtree_end = static_cast<int>(tree.nodes.size());
  };
  for (int r : roots) {
    tree.roots.push_back(static_cast<int>(tree.nodes.size()));
    visit(r, -1, "");
  }
  return tree;
}

ValidationReport validate_spec(const SpatialGraphSpec& spec) {
  ValidationReport report;
  const int n = static_cast<int>(spec.components.size());
  if (n == 0) report.add("empty", "no components");

  std::set<std::string> ids;
  for (const auto& c : spec.components) {
    if (!ids.insert(c.id).second) report.add("duplicate component", "component id '" + c.id + "' repeats");
  }

  bool components_ok = true;
  for (const auto& c : spec.components) {
    auto sub = validate_presentation(c.presentation);
    for (auto& v : sub.violations) {
      report.add(v.code, "component '" + c.id + "': " + v.message);
      components_ok = false;
    }
  }

  bool attachments_ok = true;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<std::string, int> stems_of;
  for (const auto& a : spec.attachments) {
    const int s = spec.component_index(a.stem);
    const int b = spec.component_index(a.branch);
    if (s < 0 || b < 0) {
      report.add("unknown component", "attachment " + a.stem + " -> " + a.branch + " names a missing component");
      attachments_ok = false;
      continue;
    }
    if (s == b) {
      report.add("self attachment", "component '" + a.stem + "' attached to itself");
      attachments_ok = false;
      continue;
    }
    if (!spec.components[s].presentation.binding_of(a.cut_vertex) ||
        !spec.components[b].presentation.binding_of(a.cut_vertex)) {
      report.add("cut vertex missing", "cut vertex '" + a.cut_vertex + "' is not labeled in both '" + a.stem +
                                           "' and '" + a.branch + "'");
      attachments_ok = false;
    }
    if (++stems_of[a.branch] > 1) {
      report.add("multiple stems", "component '" + a.branch + "' declares more than one stem");
      attachments_ok = false;
    }
    if (find(s) == find(b)) {
      report.add("attachment cycle", "attachments do not form a forest");
      attachments_ok = false;
    } else {
      parent[find(s)] = find(b);
    }
  }

  // A label shared by several components must be exactly the cut vertex of
  // attachments joining them.
  std::map<std::string, std::vector<int>> holders;
  for (int i = 0; i < n; ++i) {
    for (const auto& l : spec.components[i].presentation.labels) {
      if (l) holders[*l].push_back(i);
    }
  }
  for (const auto& [label, comps] : holders) {
    int joins = 0;
    for (const auto& a : spec.attachments) {
      if (a.cut_vertex == label) ++joins;
    }
    if (joins != static_cast<int>(comps.size()) - 1) {
      report.add("shared vertex without attachment",
                 "vertex '" + label + "' appears in " + std::to_string(comps.size()) + " components but " +
                     std::to_string(joins) + " attachments use it");
      attachments_ok = false;
    }
  }

  if (!components_ok) return report;

  // Degrees.
  std::map<std::string, int> degree;
  std::map<std::string, int> first_holder;
  for (int i = 0; i < n; ++i) {
    const auto& pres = spec.components[i].presentation;
    const auto deg = binding_degrees(pres);
    for (int bp = 1; bp <= pres.beta(); ++bp) {
      if (pres.label(bp)) {
        degree[*pres.label(bp)] += deg[bp];
        first_holder.emplace(*pres.label(bp), i);
      }
    }
  }
  for (const auto& [label, d] : degree) {
    if (d >= 3 && d <= 6) continue;
    if (d == 2 && holders[label].size() == 1 &&
        classify_component(spec.components[first_holder[label]], spec.attachments).kind == ComponentKind::Knot) {
      continue;
    }
    report.add("degree out of range", "vertex '" + label + "' has degree " + std::to_string(d) +
                                          " (need 3..6, or 2 on a knot component)");
  }

  if (!attachments_ok) return report;
  try {
    const auto tree = build_cut_tree(spec);
    for (const auto& node : tree.nodes) {
      std::set<std::string> used;
      for (int b : node.branches) {
        if (!used.insert(tree.nodes[b].cut_vertex).second) {
          report.add("siblings share cut-vertex", "two branches of '" + spec.components[node.component].id +
                                                      "' attach at '" + tree.nodes[b].cut_vertex + "'");
        }
      }
    }
  } catch (const Error& e) {
    report.add("no valid root", e.what());
  }
  return report;
}

GraphCensus census(const SpatialGraphSpec& spec) {
  GraphCensus c;
  c.s = static_cast<int>(spec.components.size());
  for (const auto& comp : spec.components) {
    c.alpha_total += comp.presentation.alpha();
    c.e += static_cast<int>(derive_edges(comp).size());
    const auto cls = classify_component(comp, spec.attachments);
    if (cls.kind == ComponentKind::Bouquet || cls.kind == ComponentKind::Knot) ++c.b;
    if (cls.kind == ComponentKind::Knot) ++c.k;
    const auto deg = binding_degrees(comp.presentation);
    for (int bp = 1; bp <= comp.presentation.beta(); ++bp) {
      if (comp.presentation.label(bp)) c.degrees[*comp.presentation.label(bp)] += deg[bp];
    }
  }
  c.v = static_cast<int>(c.degrees.size());
  return c;
}

}  // namespace latstick
