#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latstick/rational.hpp"

namespace latstick {

// Where a stick came from in the construction. Informational only; the
// validators never consult it.
enum class StickKind { Arc, Column, Connector, Merge, Straightened, Loaded };

// Closed axis-parallel segment [a, b] with a < b along `axis` and the other
// two coordinates equal.
class Stick {
 public:
  Stick(Point3 p, Point3 q, StickKind kind = StickKind::Loaded, int owner = -1);

  const Point3& a() const { return a_; }
  const Point3& b() const { return b_; }
  Axis axis() const { return axis_; }
  StickKind kind() const { return kind_; }
  int owner() const { return owner_; }
  Rational length() const { return b_[axis_] - a_[axis_]; }

  bool has_endpoint(const Point3& p) const { return p == a_ || p == b_; }
  const Point3& other_end(const Point3& p) const { return p == a_ ? b_ : a_; }
  bool contains(const Point3& p) const;
  // Direction leaving endpoint `p` along the stick.
  Direction direction_from(const Point3& p) const;

  void set_owner(int owner) { owner_ = owner; }

 private:
  Point3 a_;
  Point3 b_;
  Axis axis_ = Axis::X;
  StickKind kind_ = StickKind::Loaded;
  int owner_ = -1;
};

// Exact-coordinate working embedding.
struct StickComplex {
  std::vector<Stick> sticks;
  std::map<std::string, Point3> markers;  // vertex label -> position

  // Indices of sticks having `p` as an endpoint.
  std::vector<int> incident(const Point3& p) const;
  std::optional<std::string> marker_at(const Point3& p) const;
};

// Merges collinear sticks that meet end to end at an unmarked point with no
// other incident stick. Owner and kind of the lower stick are kept.
StickComplex fuse_collinear(const StickComplex& complex);

using IntPoint = std::array<std::int64_t, 3>;

struct LatticeStick {
  Axis axis = Axis::X;
  IntPoint start{};  // lexicographically smaller end
  IntPoint end{};
};

struct LatticeVertex {
  std::string id;
  IntPoint position{};
};

struct LatticeEdge {
  std::string id;
  std::string component;  // id of the cut-component the edge belongs to, if known
  std::string from;
  std::string to;
  std::vector<IntPoint> polyline;  // bend points, vertex to vertex
};

// Integer-coordinate embedding with all minima at 0. Sticks are maximal
// (fused) so their number is the stick count.
struct LatticeEmbedding {
  std::vector<LatticeStick> sticks;
  std::vector<LatticeVertex> vertices;
  std::vector<LatticeEdge> edges;
  IntPoint bbox_max{};
};

StickComplex to_complex(const LatticeEmbedding& emb);

}  // namespace latstick
