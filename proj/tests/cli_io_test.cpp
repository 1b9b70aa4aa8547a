#include <doctest.h>

#include <sstream>

#include "latstick/fixtures.hpp"
#include "latstick/io.hpp"
#include "latstick/lattice_build.hpp"

using namespace latstick;
using nlohmann::json;

namespace {

ErrorCode parse_error_code(const json& doc) {
  try {
    parse_input(doc);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse error");
  return ErrorCode::InvalidSpec;
}

}  // namespace

TEST_CASE("input documents round trip") {
  for (const auto& name : demo_names()) {
    const auto spec = *demo_fixture(name);
    const auto again = parse_input(input_to_json(spec));
    REQUIRE(again.components.size() == spec.components.size());
    for (std::size_t i = 0; i < spec.components.size(); ++i) {
      CHECK(again.components[i].id == spec.components[i].id);
      CHECK(again.components[i].presentation.labels == spec.components[i].presentation.labels);
      CHECK(again.components[i].presentation.arcs == spec.components[i].presentation.arcs);
    }
    CHECK(again.attachments.size() == spec.attachments.size());
    CHECK(again.declared_crossings == spec.declared_crossings);
  }
}

TEST_CASE("unknown keys and wrong types are rejected") {
  auto doc = input_to_json(*demo_fixture("unknot"));
  doc["colour"] = "red";
  CHECK(parse_error_code(doc) == ErrorCode::ParseError);

  doc = input_to_json(*demo_fixture("unknot"));
  doc["components"][0]["arcs"][0]["pages"] = 1;
  CHECK(parse_error_code(doc) == ErrorCode::ParseError);

  doc = input_to_json(*demo_fixture("unknot"));
  doc["components"][0]["arcs"][0]["page"] = "one";
  CHECK(parse_error_code(doc) == ErrorCode::ParseError);

  doc = input_to_json(*demo_fixture("unknot"));
  doc["components"][0]["binding_points"][1]["index"] = 1;
  CHECK(parse_error_code(doc) == ErrorCode::ParseError);
}

TEST_CASE("embedding documents round trip and are consistent") {
  for (const auto& name : demo_names()) {
    const auto r = build_full(*demo_fixture(name));
    const auto doc = embedding_to_json(r.embedding, r.counts, &r.bound);
    const auto back = parse_embedding(json::parse(doc.dump()));
    CHECK(back.sticks.size() == r.embedding.sticks.size());
    CHECK(back.edges.size() == r.embedding.edges.size());
    CHECK(check_consistency(back).ok());
    CHECK(doc["counts"]["total"] == r.counts.total);
    CHECK(to_obj(back) == to_obj(r.embedding));
  }
}

TEST_CASE("a corrupted stick is inconsistent") {
  const auto r = build_full(*demo_fixture("unknot"));
  auto emb = r.embedding;
  emb.sticks[0].end[0] += 1;
  CHECK(!check_consistency(emb).ok());
  emb = r.embedding;
  emb.sticks.pop_back();
  CHECK(check_consistency(emb).has("coverage"));
}

TEST_CASE("obj export") {
  const auto rect = build_full(*demo_fixture("unknot")).embedding;
  const auto obj = to_obj(rect);
  int v = 0, l = 0;
  std::istringstream in(obj);
  for (std::string line; std::getline(in, line);) {
    v += line.rfind("v ", 0) == 0;
    l += line.rfind("l ", 0) == 0;
  }
  CHECK(v == 4);
  CHECK(l == 4);
  CHECK(obj.back() == '\n');
  CHECK(obj.find("  ") == std::string::npos);
  CHECK(obj.find('+') == std::string::npos);

  // A connected graph with 7 sticks and cycle rank 2 has 6 distinct points.
  const auto th = to_obj(build_full(*demo_fixture("theta-planar")).embedding);
  v = l = 0;
  std::istringstream in2(th);
  for (std::string line; std::getline(in2, line);) {
    v += line.rfind("v ", 0) == 0;
    l += line.rfind("l ", 0) == 0;
  }
  CHECK(v == 6);
  CHECK(l == 7);
  CHECK(to_obj(build_full(*demo_fixture("theta-planar")).embedding) == th);
}

TEST_CASE("demo names") {
  CHECK(demo_names().size() == 6);
  CHECK(!demo_fixture("stl"));
  for (const auto& name : demo_names()) CHECK(validate_spec(*demo_fixture(name)).ok());
}
