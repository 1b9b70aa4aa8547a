#include <doctest.h>

#include <set>

#include "latstick/diagram_invariants.hpp"
#include "latstick/fixtures.hpp"
#include "latstick/lattice_build.hpp"
#include "oracles.hpp"

using namespace latstick;

namespace {

// Gauss code as signed crossing labels, positive = over.
GaussData gauss(std::initializer_list<int> code) {
  GaussData g;
  std::set<int> ids;
  for (int c : code) {
    g.sequence.push_back({std::abs(c) - 1, c > 0});
    ids.insert(std::abs(c));
  }
  g.crossings = static_cast<int>(ids.size());
  return g;
}

const GaussData kTrefoil = gauss({1, -2, 3, -1, 2, -3});
const GaussData kFigureEight = gauss({-1, 2, -3, 1, -4, 3, -2, 4});

// |det| of the relation matrix minus row `skip_r` and column `skip_c`, by
// rational elimination.
Rational minor_det(const GaussData& g, int skip_r, int skip_c) {
  const int n = g.crossings;
  if (n <= 1) return 1;
  std::vector<std::vector<Rational>> full(n, std::vector<Rational>(n, 0));
  const auto rel = oracle::relations(g);
  for (int c = 0; c < n; ++c) {
    full[c][rel[c].over] += 2;
    full[c][rel[c].in] -= 1;
    full[c][rel[c].out] -= 1;
  }
  std::vector<std::vector<Rational>> m;
  for (int i = 0; i < n; ++i) {
    if (i == skip_r) continue;
    std::vector<Rational> row;
    for (int j = 0; j < n; ++j) {
      if (j != skip_c) row.push_back(full[i][j]);
    }
    m.push_back(row);
  }
  const int k = n - 1;
  Rational det = 1;
  for (int col = 0; col < k; ++col) {
    int piv = col;
    while (piv < k && m[piv][col] == 0) ++piv;
    if (piv == k) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < k; ++r) {
      const Rational f = m[r][col] / m[col][col];
      for (int j = col; j < k; ++j) m[r][j] -= f * m[col][j];
    }
  }
  return abs(det);
}

LatticeEmbedding two_edges(std::vector<IntPoint> first, std::vector<IntPoint> second) {
  LatticeEmbedding e;
  e.edges.push_back({"e1", "", "", "", std::move(first)});
  e.edges.push_back({"e2", "", "", "", std::move(second)});
  return e;
}

}  // namespace

TEST_CASE("standard diagrams") {
  CHECK(knot_determinant(kTrefoil) == 3);
  CHECK(knot_determinant(kFigureEight) == 5);
  CHECK(knot_determinant(GaussData{}) == 1);
  CHECK(p_coloring_count(kTrefoil, 3) == 9);
  CHECK(p_coloring_count(kFigureEight, 3) == 3);
  CHECK(p_coloring_count(kFigureEight, 5) == 25);
  for (int p : {3, 5, 7}) {
    CHECK(p_coloring_count(kTrefoil, p) == oracle::naive_colorings(kTrefoil, p));
    CHECK(p_coloring_count(kFigureEight, p) == oracle::naive_colorings(kFigureEight, p));
  }
}

TEST_CASE("determinant matches the rational-elimination oracle for every deleted row and column") {
  for (const auto* g : {&kTrefoil, &kFigureEight}) {
    const auto det = knot_determinant(*g);
    for (int r = 0; r < g->crossings; ++r) {
      for (int c = 0; c < g->crossings; ++c) CHECK(minor_det(*g, r, c) == Rational(det));
    }
  }
}

TEST_CASE("coloring argument rejects bad primes and large diagrams") {
  CHECK_THROWS_AS(p_coloring_count(kTrefoil, 4), std::invalid_argument);
  CHECK_THROWS_AS(p_coloring_count(kTrefoil, 9), std::invalid_argument);
  GaussData big;
  big.crossings = kMaxColoringStrands + 1;
  for (int i = 0; i < big.crossings; ++i) {
    big.sequence.push_back({i, true});
    big.sequence.push_back({i, false});
  }
  try {
    p_coloring_count(big, 3);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}

TEST_CASE("shear separates parallel sticks at different heights") {
  const auto e = two_edges({{0, 0, 0}, {2, 0, 0}}, {{0, 0, 1}, {2, 0, 1}});
  const auto d = project_generic(e);
  CHECK(crossing_count(d) == 0);
  CHECK(d.segments[0].p != d.segments[1].p);
}

TEST_CASE("a plain crossing has the higher stick over") {
  const auto e = two_edges({{0, 1, 0}, {2, 1, 0}}, {{1, 0, 3}, {1, 2, 3}});
  const auto d = project_generic(e);
  REQUIRE(crossing_count(d) == 1);
  CHECK(d.segments[d.crossings[0].over].edge == 1);
}

TEST_CASE("built knots keep their determinant") {
  for (const auto& name : {"unknot", "trefoil", "figure8"}) {
    CAPTURE(name);
    const auto r = build_full(*demo_fixture(name));
    const auto d = project_generic(r.embedding, std::string("knot"));
    const auto g = extract_knot_cycle(d);
    CHECK(static_cast<int>(g.sequence.size()) == 2 * g.crossings);
    std::vector<int> over(g.crossings), under(g.crossings);
    for (const auto& v : g.sequence) ++(v.over ? over : under)[v.crossing];
    for (int c = 0; c < g.crossings; ++c) {
      CHECK(over[c] == 1);
      CHECK(under[c] == 1);
    }
    const auto det = knot_determinant(g);
    CHECK(det == *reference_determinant(name));
    CHECK(minor_det(g, 0, 0) == Rational(det));
    for (int p : {3, 5, 7}) {
      const bool divides = det % p == 0;
      CHECK((p_coloring_count(g, p) > p) == divides);
    }
    // Finer shears give the same determinant.
    for (std::int64_t n : {1 << 8, 1 << 12}) {
      CHECK(knot_determinant(extract_knot_cycle(project_generic(r.embedding, std::string("knot"), n))) == det);
    }
  }
}

TEST_CASE("crossing counts of built fixtures") {
  CHECK(crossing_count(project_generic(build_full(*demo_fixture("unknot")).embedding)) == 0);
  CHECK(crossing_count(project_generic(build_full(*demo_fixture("trefoil")).embedding)) >= 3);
  CHECK(crossing_count(project_generic(build_full(*demo_fixture("theta-planar")).embedding)) == 0);
}

TEST_CASE("built trefoil colorings agree with plain enumeration") {
  const auto r = build_full(*demo_fixture("trefoil"));
  const auto g = extract_knot_cycle(project_generic(r.embedding));
  REQUIRE(g.crossings <= 8);
  for (int p : {3, 5, 7}) CHECK(p_coloring_count(g, p) == oracle::naive_colorings(g, p));
}

TEST_CASE("theta is not a cycle") {
  const auto r = build_full(*demo_fixture("theta-planar"));
  try {
    extract_knot_cycle(project_generic(r.embedding, std::string("theta")));
    FAIL("expected NotACycle");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotACycle);
  }
}
