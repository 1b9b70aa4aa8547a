#pragma once

#include <cstdint>

namespace latstick {

// Closed-form quantities. Pure integer functions with no geometry dependency.

struct BoundInputs {
  std::int64_t alpha = 0;  // witness for the arc index (total arc count)
  std::int64_t c = 0;      // witness for the crossing number
  std::int64_t e = 0;
  std::int64_t v = 0;
  std::int64_t s = 0;
  std::int64_t b = 0;
  std::int64_t k = 0;
};

// Binding-point count of a presentation with `alpha` arcs: alpha + v - e.
// Throws Error(InvalidCounts) if the result is below 1.
std::int64_t lemma_binding(std::int64_t alpha, std::int64_t v, std::int64_t e);

// Upper bound on the arc index: c + e + b.
std::int64_t arc_index_upper(std::int64_t c, std::int64_t e, std::int64_t b);

// Stick count of the construction: 3*alpha + 3e - 4v - 2s + k.
// Throws Error(InvalidCounts) if the result is below 3 for nonempty input.
std::int64_t construction_count(std::int64_t alpha, std::int64_t e, std::int64_t v, std::int64_t s,
                                std::int64_t k);

// Lattice stick number bound in terms of crossings: 3c + 6e - 4v - 2s + 3b + k.
std::int64_t main_upper(std::int64_t c, std::int64_t e, std::int64_t v, std::int64_t s, std::int64_t b,
                        std::int64_t k);

// construction_count(arc_index_upper(c, e, b), ...) == main_upper(...).
bool identity_check(std::int64_t c, std::int64_t e, std::int64_t v, std::int64_t s, std::int64_t b,
                    std::int64_t k);

inline std::int64_t construction_count(const BoundInputs& in) {
  return construction_count(in.alpha, in.e, in.v, in.s, in.k);
}
inline std::int64_t main_upper(const BoundInputs& in) {
  return main_upper(in.c, in.e, in.v, in.s, in.b, in.k);
}

}  // namespace latstick
