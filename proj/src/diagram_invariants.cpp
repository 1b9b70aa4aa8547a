#include "latstick/diagram_invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "latstick/errors.hpp"

namespace latstick {

namespace {

Rational cross(const Plane& o, const Plane& a, const Plane& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

// Parameter of a point known to lie on segment p-q.
Rational param(const Plane& p, const Plane& q, const Plane& x) {
  const int i = q[0] != p[0] ? 0 : 1;
  return (x[i] - p[i]) / (q[i] - p[i]);
}

Point3 to_point(const IntPoint& p) { return {p[0], p[1], p[2]}; }

struct Attempt {
  std::vector<DiagramCrossing> crossings;
  bool generic = true;
};

Attempt intersect_all(const std::vector<ProjectedSegment>& segs) {
  Attempt out;
  const int n = static_cast<int>(segs.size());
  for (int i = 0; i < n && out.generic; ++i) {
    for (int j = i + 1; j < n && out.generic; ++j) {
      const auto& s = segs[i];
      const auto& t = segs[j];
      const Rational d1 = cross(s.p, s.q, t.p);
      const Rational d2 = cross(s.p, s.q, t.q);
      const Rational d3 = cross(t.p, t.q, s.p);
      const Rational d4 = cross(t.p, t.q, s.q);
      std::optional<Point3> shared;
      for (const auto* x : {&s.a, &s.b}) {
        if (*x == t.a || *x == t.b) shared = *x;
      }
      if (d1 == 0 && d2 == 0) {
        // Collinear in projection: they may touch only at a shared endpoint.
        const Rational t0 = param(s.p, s.q, t.p);
        const Rational t1 = param(s.p, s.q, t.q);
        const Rational lo = std::max(Rational(0), std::min(t0, t1));
        const Rational hi = std::min(Rational(1), std::max(t0, t1));
        if (lo < hi) out.generic = false;
        else if (lo == hi && !shared) out.generic = false;
        continue;
      }
      if (sign(d1) * sign(d2) < 0 && sign(d3) * sign(d4) < 0) {
        const Plane r{t.p[0] - s.p[0], t.p[1] - s.p[1]};
        const Plane ds{s.q[0] - s.p[0], s.q[1] - s.p[1]};
        const Plane dt{t.q[0] - t.p[0], t.q[1] - t.p[1]};
        const Rational den = ds[0] * dt[1] - ds[1] * dt[0];
        const Rational u = (r[0] * dt[1] - r[1] * dt[0]) / den;
        const Rational v = (r[0] * ds[1] - r[1] * ds[0]) / den;
        const Rational zs = s.a.z() + u * (s.b.z() - s.a.z());
        const Rational zt = t.a.z() + v * (t.b.z() - t.a.z());
        if (zs == zt) throw std::logic_error("projected crossing is a point of the embedding");
        const Plane at{s.p[0] + u * ds[0], s.p[1] + u * ds[1]};
        if (zs > zt) out.crossings.push_back({i, j, at, u, v});
        else out.crossings.push_back({j, i, at, v, u});
        continue;
      }
      // Remaining contacts involve an endpoint; only shared corners are fine.
      const bool touch = (d1 == 0 && sign(d3) * sign(d4) <= 0) || (d2 == 0 && sign(d3) * sign(d4) <= 0) ||
                         (d3 == 0 && sign(d1) * sign(d2) <= 0) || (d4 == 0 && sign(d1) * sign(d2) <= 0);
      if (touch && !shared) out.generic = false;
    }
  }
  for (std::size_t i = 0; i < out.crossings.size() && out.generic; ++i) {
    for (std::size_t j = i + 1; j < out.crossings.size(); ++j) {
      if (out.crossings[i].at == out.crossings[j].at) {
        out.generic = false;
        break;
      }
    }
  }
  return out;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

GraphDiagram project_generic(const LatticeEmbedding& emb, const std::optional<std::string>& component,
                             std::int64_t min_shear) {
  GraphDiagram d;
  std::int64_t range = 1;
  std::vector<const LatticeEdge*> chosen;
  for (const auto& e : emb.edges) {
    if (component && e.component != *component) continue;
    chosen.push_back(&e);
    for (const auto& p : e.polyline) {
      for (auto c : p) range = std::max(range, c < 0 ? -c : c);
    }
  }
  Rational n = 2;
  while (n <= range + 1 || n < min_shear) n *= 2;

  for (int attempt = 0; attempt < 64; ++attempt, n *= 2) {
    d = GraphDiagram{};
    d.shear = n;
    for (std::size_t ei = 0; ei < chosen.size(); ++ei) {
      const auto& e = *chosen[ei];
      d.edge_ids.push_back(e.id);
      d.edge_from.push_back(e.from);
      d.edge_to.push_back(e.to);
      for (std::size_t k = 0; k + 1 < e.polyline.size(); ++k) {
        ProjectedSegment s;
        s.edge = static_cast<int>(ei);
        s.index = static_cast<int>(k);
        s.a = to_point(e.polyline[k]);
        s.b = to_point(e.polyline[k + 1]);
        s.p = {s.a.x() + s.a.z() / n, s.a.y() + s.a.z() / (n * n)};
        s.q = {s.b.x() + s.b.z() / n, s.b.y() + s.b.z() / (n * n)};
        d.segments.push_back(s);
      }
    }
    auto result = intersect_all(d.segments);
    if (result.generic) {
      d.crossings = std::move(result.crossings);
      return d;
    }
  }
  throw std::logic_error("no generic projection found");
}

int crossing_count(const GraphDiagram& diagram) { return static_cast<int>(diagram.crossings.size()); }

GaussData extract_knot_cycle(const GraphDiagram& diagram) {
  const int m = static_cast<int>(diagram.edge_ids.size());
  if (m == 0) throw Error(ErrorCode::NotACycle, "no edges selected");
  std::map<std::string, int> degree;
  for (int i = 0; i < m; ++i) {
    ++degree[diagram.edge_from[i]];
    ++degree[diagram.edge_to[i]];
  }
  for (const auto& [v, deg] : degree) {
    if (deg != 2) throw Error(ErrorCode::NotACycle, "vertex '" + v + "' has degree " + std::to_string(deg));
  }

  // Walk the cycle: (edge, forward) pairs in travel order.
  std::vector<std::pair<int, bool>> walk;
  std::vector<bool> used(m, false);
  std::string at = diagram.edge_from[0];
  int edge = 0;
  bool forward = true;
  while (true) {
    used[edge] = true;
    walk.emplace_back(edge, forward);
    at = forward ? diagram.edge_to[edge] : diagram.edge_from[edge];
    int next = -1;
    for (int i = 0; i < m && next < 0; ++i) {
      if (used[i]) continue;
      if (diagram.edge_from[i] == at) {
        next = i;
        forward = true;
      } else if (diagram.edge_to[i] == at) {
        next = i;
        forward = false;
      }
    }
    if (next < 0) break;
    edge = next;
  }
  if (static_cast<int>(walk.size()) != m) throw Error(ErrorCode::NotACycle, "edges form more than one cycle");

  std::vector<std::vector<int>> by_edge(m);
  for (int s = 0; s < static_cast<int>(diagram.segments.size()); ++s) by_edge[diagram.segments[s].edge].push_back(s);

  struct Visit {
    int crossing;
    bool over;
    Rational t;
  };
  std::vector<std::vector<Visit>> on_segment(diagram.segments.size());
  for (int c = 0; c < static_cast<int>(diagram.crossings.size()); ++c) {
    const auto& x = diagram.crossings[c];
    on_segment[x.over].push_back({c, true, x.over_t});
    on_segment[x.under].push_back({c, false, x.under_t});
  }

  GaussData g;
  std::map<int, int> renumber;
  for (const auto& [e, fwd] : walk) {
    auto segs = by_edge[e];
    if (!fwd) std::reverse(segs.begin(), segs.end());
    for (int s : segs) {
      auto visits = on_segment[s];
      std::sort(visits.begin(), visits.end(), [&](const Visit& a, const Visit& b) { return fwd ? a.t < b.t : a.t > b.t; });
      for (const auto& v : visits) {
        const auto [it, fresh] = renumber.try_emplace(v.crossing, static_cast<int>(renumber.size()));
        g.sequence.push_back({it->second, v.over});
      }
    }
  }
  g.crossings = static_cast<int>(renumber.size());
  return g;
}

std::vector<std::vector<long long>> coloring_matrix(const GaussData& gauss) {
  const int n = gauss.crossings;
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  if (n == 0) return m;
  std::vector<int> strand(gauss.sequence.size());
  int unders = 0;
  for (std::size_t i = 0; i < gauss.sequence.size(); ++i) {
    strand[i] = unders % n;
    if (!gauss.sequence[i].over) ++unders;
  }
  for (std::size_t i = 0; i < gauss.sequence.size(); ++i) {
    const auto& v = gauss.sequence[i];
    if (v.over) {
      m[v.crossing][strand[i]] += 2;
    } else {
      m[v.crossing][strand[i]] -= 1;
      m[v.crossing][(strand[i] + 1) % n] -= 1;
    }
  }
  return m;
}

BigInt knot_determinant(const GaussData& gauss) {
  const auto full = coloring_matrix(gauss);
  const int n = static_cast<int>(full.size()) - 1;
  if (n <= 0) return 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = full[i][j];
  }
  // Fraction-free Bareiss elimination.
  BigInt prev = 1;
  int swaps = 0;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      ++swaps;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  BigInt det = a[n - 1][n - 1];
  (void)swaps;
  return det < 0 ? BigInt(-det) : det;
}

BigInt p_coloring_count(const GaussData& gauss, int p) {
  if (p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  const int n = gauss.crossings;
  if (n == 0) return p;
  if (n > kMaxColoringStrands) {
    throw Error(ErrorCode::TooLarge, std::to_string(n) + " strands exceed the limit of " +
                                         std::to_string(kMaxColoringStrands));
  }
  // Each crossing gives one linear relation sum(coef * colour) = 0 mod p.
  std::vector<std::map<int, int>> rows;
  for (const auto& row : coloring_matrix(gauss)) {
    std::map<int, int> r;
    for (int j = 0; j < n; ++j) {
      const int c = static_cast<int>(((row[j] % p) + p) % p);
      if (c) r[j] = c;
    }
    rows.push_back(std::move(r));
  }
  auto inverse = [p](int a) {
    int result = 1;
    for (int e = p - 2, b = a; e > 0; e >>= 1, b = b * b % p) {
      if (e & 1) result = result * b % p;
    }
    return result;
  };

  BigInt count = 0;
  std::vector<int> colour(n, -1);
  std::function<void()> search = [&]() {
    std::vector<int> assigned;
    bool changed = true;
    bool consistent = true;
    while (changed && consistent) {
      changed = false;
      for (const auto& r : rows) {
        int unknown = -1;
        int unknowns = 0;
        int sum = 0;
        for (const auto& [j, c] : r) {
          if (colour[j] < 0) {
            ++unknowns;
            unknown = j;
          } else {
            sum = (sum + c * colour[j]) % p;
          }
        }
        if (unknowns == 0 && sum != 0) consistent = false;
        if (unknowns == 1) {
          colour[unknown] = (p - sum) % p * inverse(r.at(unknown)) % p;
          assigned.push_back(unknown);
          changed = true;
        }
        if (!consistent) break;
      }
    }
    if (consistent) {
      const auto free = std::find(colour.begin(), colour.end(), -1);
      if (free == colour.end()) {
        ++count;
      } else {
        for (int c = 0; c < p; ++c) {
          *free = c;
          search();
        }
        *free = -1;
      }
    }
    for (int j : assigned) colour[j] = -1;
  };
  search();
  return count;
}

}  // namespace latstick
