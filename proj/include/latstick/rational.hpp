#pragma once

#include <array>
#include <compare>
#include <ostream>

#include <boost/multiprecision/cpp_int.hpp>

namespace latstick {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

enum class Axis { X = 0, Y = 1, Z = 2 };

constexpr char axis_name(Axis a) { return a == Axis::X ? 'x' : a == Axis::Y ? 'y' : 'z'; }

// Exact point in 3-space.
struct Point3 {
  std::array<Rational, 3> c{};

  Point3() = default;
  Point3(Rational x, Rational y, Rational z) : c{std::move(x), std::move(y), std::move(z)} {}

  const Rational& x() const { return c[0]; }
  const Rational& y() const { return c[1]; }
  const Rational& z() const { return c[2]; }
  const Rational& operator[](Axis a) const { return c[static_cast<int>(a)]; }
  Rational& operator[](Axis a) { return c[static_cast<int>(a)]; }
  const Rational& operator[](int i) const { return c[i]; }
  Rational& operator[](int i) { return c[i]; }

  friend bool operator==(const Point3& a, const Point3& b) { return a.c == b.c; }
  friend bool operator<(const Point3& a, const Point3& b) { return a.c < b.c; }

  Point3 operator+(const Point3& o) const { return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2]}; }
  Point3 operator-(const Point3& o) const { return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2]}; }
  Point3 operator*(const Rational& s) const { return {c[0] * s, c[1] * s, c[2] * s}; }
};

std::ostream& operator<<(std::ostream& os, const Point3& p);

// One of the six unit lattice directions.
struct Direction {
  Axis axis = Axis::X;
  int sign = 1;

  friend bool operator==(const Direction&, const Direction&) = default;
  friend auto operator<=>(const Direction&, const Direction&) = default;

  Direction opposite() const { return {axis, -sign}; }
  Point3 vec() const {
    Point3 p;
    p[axis] = sign;
    return p;
  }
};

std::ostream& operator<<(std::ostream& os, const Direction& d);

}  // namespace latstick
