#include "latstick/arc_presentation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace latstick {

int ArcPresentation::labeled_count() const {
  return static_cast<int>(std::count_if(labels.begin(), labels.end(),
                                        [](const auto& l) { return l.has_value(); }));
}

std::optional<int> ArcPresentation::binding_of(const std::string& vertex) const {
  for (int i = 0; i < beta(); ++i) {
    if (labels[i] && *labels[i] == vertex) return i + 1;
  }
  return std::nullopt;
}

int ArcPresentation::arc_on_page(int page) const {
  for (int i = 0; i < alpha(); ++i) {
    if (arcs[i].page == page) return i;
  }
  return -1;
}

std::vector<int> binding_degrees(const ArcPresentation& pres) {
  std::vector<int> deg(pres.beta() + 1, 0);
  for (const auto& a : pres.arcs) {
    if (a.lo >= 1 && a.lo <= pres.beta()) ++deg[a.lo];
    if (a.hi >= 1 && a.hi <= pres.beta()) ++deg[a.hi];
  }
  return deg;
}

std::vector<int> incident_levels(const ArcPresentation& pres, int bp) {
  if (bp < 1 || bp > pres.beta()) {
    throw Error(ErrorCode::UnknownBindingPoint,
                "binding point " + std::to_string(bp) + " outside 1.." + std::to_string(pres.beta()));
  }
  std::vector<int> pages;
  for (const auto& a : pres.arcs) {
    if (a.lo == bp || a.hi == bp) pages.push_back(a.page);
  }
  std::sort(pages.begin(), pages.end());
  return pages;
}

std::vector<EdgeTrace> trace_edges(const ArcPresentation& pres) {
  const int beta = pres.beta();
  std::vector<std::vector<int>> incident(beta + 1);
  for (int i = 0; i < pres.alpha(); ++i) {
    const auto& a = pres.arcs[i];
    if (a.lo < 1 || a.hi > beta || a.lo >= a.hi) {
      throw Error(ErrorCode::InvalidSpec, "arc on page " + std::to_string(a.page) + " is malformed");
    }
    incident[a.lo].push_back(i);
    incident[a.hi].push_back(i);
  }
  for (auto& list : incident) {
    std::sort(list.begin(), list.end(),
              [&](int l, int r) { return pres.arcs[l].page < pres.arcs[r].page; });
  }

  std::vector<bool> used(pres.alpha(), false);
  std::vector<EdgeTrace> edges;
  for (int start = 1; start <= beta; ++start) {
    if (!pres.label(start)) continue;
    for (int first : incident[start]) {
      if (used[first]) continue;
      EdgeTrace t;
      t.from = *pres.label(start);
      t.binding_path.push_back(start);
      int cur = start;
      int arc = first;
      while (true) {
        used[arc] = true;
        t.arcs.push_back(arc);
        const auto& a = pres.arcs[arc];
        cur = (a.lo == cur) ? a.hi : a.lo;
        t.binding_path.push_back(cur);
        if (pres.label(cur)) break;
        if (incident[cur].size() != 2) {
          throw Error(ErrorCode::UnlabeledEndpoint,
                      "walk stops at unlabeled binding point " + std::to_string(cur) + " of degree " +
                          std::to_string(incident[cur].size()));
        }
        arc = incident[cur][0] == arc ? incident[cur][1] : incident[cur][0];
        if (used[arc]) {
          throw Error(ErrorCode::InvalidSpec, "edge walk revisits an arc");
        }
      }
      t.to = *pres.label(cur);
      edges.push_back(std::move(t));
    }
  }
  for (int i = 0; i < pres.alpha(); ++i) {
    if (!used[i]) {
      throw Error(ErrorCode::InvalidSpec,
                  "arc on page " + std::to_string(pres.arcs[i].page) + " lies on a cycle with no vertex");
    }
  }
  return edges;
}

namespace {

bool connected(const ArcPresentation& pres) {
  const int beta = pres.beta();
  if (beta == 0) return false;
  std::vector<int> parent(beta + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : pres.arcs) {
    if (a.lo >= 1 && a.hi <= beta && a.lo <= beta && a.hi >= 1) parent[find(a.lo)] = find(a.hi);
  }
  const int root = find(1);
  for (int i = 2; i <= beta; ++i) {
    if (find(i) != root) return false;
  }
  return true;
}

}  // namespace

ValidationReport validate_presentation(const ArcPresentation& pres) {
  ValidationReport report;
  const int alpha = pres.alpha();
  const int beta = pres.beta();
  if (alpha == 0) report.add("empty", "presentation has no arcs");

  std::set<std::string> seen_labels;
  for (const auto& l : pres.labels) {
    if (l && !seen_labels.insert(*l).second) {
      report.add("duplicate label", "vertex '" + *l + "' labels two binding points");
    }
  }

  std::vector<int> pages;
  bool structural = true;
  for (const auto& a : pres.arcs) {
    pages.push_back(a.page);
    if (a.lo == a.hi) {
      report.add("self-loop arc", "arc on page " + std::to_string(a.page) + " joins binding point " +
                                      std::to_string(a.lo) + " to itself");
      structural = false;
    } else if (a.lo > a.hi) {
      report.add("arc order", "arc on page " + std::to_string(a.page) + " has lo > hi");
      structural = false;
    }
    if (a.lo < 1 || a.hi < 1 || a.lo > beta || a.hi > beta) {
      report.add("binding index out of range",
                 "arc on page " + std::to_string(a.page) + " leaves 1.." + std::to_string(beta));
      structural = false;
    }
  }
  std::sort(pages.begin(), pages.end());
  for (int i = 0; i < alpha; ++i) {
    if (pages[i] != i + 1) {
      report.add("pages not a bijection", "page numbers are not exactly 1.." + std::to_string(alpha));
      structural = false;
      break;
    }
  }
  if (!structural) return report;

  const auto deg = binding_degrees(pres);
  for (int i = 1; i <= beta; ++i) {
    if (deg[i] == 0) {
      report.add("isolated binding point", "binding point " + std::to_string(i) + " has no arc");
      structural = false;
    } else if (!pres.label(i) && deg[i] != 2) {
      report.add("unlabeled degree", "unlabeled binding point " + std::to_string(i) + " has degree " +
                                         std::to_string(deg[i]));
      structural = false;
    }
  }
  if (!connected(pres)) {
    report.add("disconnected", "arcs do not form a single connected piece");
  }
  if (!structural) return report;

  int edges = 0;
  try {
    edges = static_cast<int>(trace_edges(pres).size());
  } catch (const Error& e) {
    report.add("edge walk", e.what());
    return report;
  }
  const int v = pres.labeled_count();
  if (beta != alpha + v - edges) {
    report.add("binding law", "beta=" + std::to_string(beta) + " but alpha+v-e=" +
                                  std::to_string(alpha + v - edges));
  }
  int labeled_degree = 0;
  for (int i = 1; i <= beta; ++i) {
    if (pres.label(i)) labeled_degree += deg[i];
  }
  if (2 * alpha != 2 * (beta - v) + labeled_degree) {
    report.add("degree identity", "2*alpha != 2*(beta - v) + sum of vertex degrees");
  }
  return report;
}

}  // namespace latstick
