#pragma once

#include <kdefect/constructions.hpp>
#include <kdefect/hypergraph.hpp>
#include <kdefect/solvers.hpp>

#include <json.hpp>

#include <string>

namespace kdefect {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

// Hypergraph formats.
//   JSON: {"n": 6, "edges": [[1,2],[2,3]]}, optional "schema": 1.
//   text: "hg <n> <m>" followed by m lines of space-separated vertices.
// Edges must be strictly increasing vertex lists, in range, and not repeated;
// their order in the input is free. Violations raise ParseError with a line.

Json to_json(const Hypergraph & h);
std::string write_json(const Hypergraph & h);
Hypergraph parse_hypergraph_json(const std::string & text);

std::string write_text(const Hypergraph & h);
Hypergraph parse_hypergraph_text(const std::string & text);

/// Picks the parser by the first non-blank character ('{' means JSON).
Hypergraph parse_hypergraph(const std::string & text);

Json to_json(const Coloring & c);
Json to_json(const DefectCertificate & c);
Json to_json(const KneserColoring & c);
Json to_json(const Report & r);

std::string write_json_line(const Report & r);
std::string write_table(const Report & r);

/// {"family": "fns", "n": 11, "s": 3}
FamilyParams parse_family_params(const Json & j);

} // namespace kdefect
