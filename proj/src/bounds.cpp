#include "latstick/bounds.hpp"

#include <string>

#include "latstick/errors.hpp"

namespace latstick {

std::int64_t lemma_binding(std::int64_t alpha, std::int64_t v, std::int64_t e) {
  const auto beta = alpha + v - e;
  if (beta < 1) {
    throw Error(ErrorCode::InvalidCounts, "alpha + v - e = " + std::to_string(beta) + " < 1");
  }
  return beta;
}

std::int64_t arc_index_upper(std::int64_t c, std::int64_t e, std::int64_t b) { return c + e + b; }

std::int64_t construction_count(std::int64_t alpha, std::int64_t e, std::int64_t v, std::int64_t s,
                                std::int64_t k) {
  const auto count = 3 * alpha + 3 * e - 4 * v - 2 * s + k;
  if (count < 3 && (alpha > 0 || e > 0)) {
    throw Error(ErrorCode::InvalidCounts, "construction count " + std::to_string(count) + " < 3");
  }
  return count;
}

std::int64_t main_upper(std::int64_t c, std::int64_t e, std::int64_t v, std::int64_t s, std::int64_t b,
                        std::int64_t k) {
  return 3 * c + 6 * e - 4 * v - 2 * s + 3 * b + k;
}

bool identity_check(std::int64_t c, std::int64_t e, std::int64_t v, std::int64_t s, std::int64_t b,
                    std::int64_t k) {
  // Evaluated without the < 3 guard so degenerate tuples still exercise the algebra.
  const auto alpha = arc_index_upper(c, e, b);
  return 3 * alpha + 3 * e - 4 * v - 2 * s + k == main_upper(c, e, v, s, b, k);
}

}  // namespace latstick
