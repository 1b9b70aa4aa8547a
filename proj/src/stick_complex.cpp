#include "latstick/stick_complex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace latstick {

Stick::Stick(Point3 p, Point3 q, StickKind kind, int owner) : kind_(kind), owner_(owner) {
  int differing = 0;
  for (int i = 0; i < 3; ++i) {
    if (p[i] != q[i]) {
      ++differing;
      axis_ = static_cast<Axis>(i);
    }
  }
  if (differing != 1) {
    std::ostringstream os;
    os << "not an axis-parallel stick: " << p << " -- " << q;
    throw std::invalid_argument(os.str());
  }
  if (q[axis_] < p[axis_]) std::swap(p, q);
  a_ = std::move(p);
  b_ = std::move(q);
}

bool Stick::contains(const Point3& p) const {
  for (int i = 0; i < 3; ++i) {
    if (i == static_cast<int>(axis_)) {
      if (p[i] < a_[i] || p[i] > b_[i]) return false;
    } else if (p[i] != a_[i]) {
      return false;
    }
  }
  return true;
}

Direction Stick::direction_from(const Point3& p) const { return {axis_, p == a_ ? 1 : -1}; }

std::vector<int> StickComplex::incident(const Point3& p) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(sticks.size()); ++i) {
    if (sticks[i].has_endpoint(p)) out.push_back(i);
  }
  return out;
}

std::optional<std::string> StickComplex::marker_at(const Point3& p) const {
  for (const auto& [label, q] : markers) {
    if (q == p) return label;
  }
  return std::nullopt;
}

StickComplex fuse_collinear(const StickComplex& complex) {
  StickComplex out;
  out.markers = complex.markers;
  std::vector<Stick> work = complex.sticks;

  std::map<Point3, std::vector<int>> ends;
  for (int i = 0; i < static_cast<int>(work.size()); ++i) {
    ends[work[i].a()].push_back(i);
    ends[work[i].b()].push_back(i);
  }
  std::vector<bool> gone(work.size(), false);
  for (int i = 0; i < static_cast<int>(work.size()); ++i) {
    if (gone[i]) continue;
    // Extend stick i upward along its axis as far as possible. Sticks are
    // visited in arbitrary order, so also extend downward.
    Point3 lo = work[i].a();
    Point3 hi = work[i].b();
    auto extend = [&](Point3& end) {
      while (true) {
        if (complex.marker_at(end)) return;
        const auto& at = ends[end];
        std::vector<int> live;
        for (int j : at) {
          if (!gone[j] && j != i) live.push_back(j);
        }
        if (live.size() != 1 || at.size() != 2) return;
        const int j = live.front();
        if (work[j].axis() != work[i].axis()) return;
        gone[j] = true;
        end = work[j].other_end(end);
      }
    };
    extend(hi);
    extend(lo);
    out.sticks.emplace_back(lo, hi, work[i].kind(), work[i].owner());
  }
  return out;
}

StickComplex to_complex(const LatticeEmbedding& emb) {
  auto pt = [](const IntPoint& p) { return Point3(p[0], p[1], p[2]); };
  StickComplex c;
  for (const auto& s : emb.sticks) c.sticks.emplace_back(pt(s.start), pt(s.end));
  for (const auto& v : emb.vertices) c.markers[v.id] = pt(v.position);
  return c;
}

}  // namespace latstick
