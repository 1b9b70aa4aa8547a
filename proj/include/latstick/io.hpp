#pragma once

#include <string>

#include <json.hpp>

#include "latstick/geometry_validate.hpp"
#include "latstick/graph_model.hpp"
#include "latstick/stick_complex.hpp"

namespace latstick {

// Input document: components with binding points and arcs, attachments, and
// an optional crossing count. Unknown keys and wrong types throw
// Error(ParseError); graph-level problems are left to validate_spec.
SpatialGraphSpec parse_input(const nlohmann::json& doc);
nlohmann::json input_to_json(const SpatialGraphSpec& spec);

nlohmann::json embedding_to_json(const LatticeEmbedding& emb, const StickCounts& counts,
                                 const BoundReport* bound = nullptr);
// Schema-level parse only. Throws Error(ParseError).
LatticeEmbedding parse_embedding(const nlohmann::json& doc);

// Sticks must be lexicographically ordered and axis-parallel, and the edge
// polylines must cover exactly the sticks.
ValidationReport check_consistency(const LatticeEmbedding& emb);

// One "v" line per distinct point in first-use order, one "l" line per stick.
std::string to_obj(const LatticeEmbedding& emb);

// Reads a whole file as JSON. Throws Error(ParseError).
nlohmann::json read_json(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace latstick
