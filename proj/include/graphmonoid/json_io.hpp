#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "graphmonoid/acyclic_oracle.hpp"
#include "graphmonoid/ck_limits.hpp"
#include "graphmonoid/desingularize.hpp"
#include "graphmonoid/graph.hpp"
#include "graphmonoid/monoid.hpp"
#include "graphmonoid/rewriting.hpp"

namespace graphmonoid::io {

using json = nlohmann::ordered_json;

// Parses text, turning syntax errors into InvalidInput with the position.
json parse(std::string_view text, std::string_view origin = "input");
json read_file(const std::string& path);

// Graph format:
//   {"vertices": [...], "edges": [{"id", "src", "dst"}, ...],
//    "infinite_emitters": {"v": {"prefix": [...], "cycle": [...],
//                                "materialized": k}}}
// Edges leaving an infinite emitter are its materialized edges, indexed in
// array order. An emitter that declares k materialized edges but lists none
// gets them generated from its descriptor. Vertices may also be written as
// {"id": ..., "boundary": true}. The result is not validated.
Graph graph_from_json(const json& j);
json to_json(const Graph& g);
// Same format, boundary vertices written as objects.
json to_json(const Desingularization& d);

// Element format:
//   {"terms": [{"gen": {"kind": "v", "v": "..."}, "mult": n},
//              {"gen": {"kind": "vS", "v": "...", "S": ["e0", ...]},
//               "mult": n}]}
// Edge sets are written with edge ids and resolved against g.
MonoidElement element_from_json(const json& j, const Graph& g);
json to_json(const MonoidElement& x, const Graph& g);
json to_json(const Generator& gen, const Graph& g);

json to_json(const Presentation& p, const Graph& g);
json to_json(const EqualityCertificate& c, const Graph& g);

SinkVector sink_vector_from_json(const json& j);
json to_json(const SinkVector& x);

// {"vertex_map": {...}, "edge_map": {...}}
GraphMorphism morphism_from_json(const json& j, Graph source, Graph target);
json to_json(const GraphMorphism& m);

// {"graphs": [...], "morphisms": [...]}, morphisms[i] from graphs[i] to
// graphs[i + 1].
GraphChain chain_from_json(const json& j);

json to_json(const ValidationReport& r, const Graph& g);
json to_json(const CkDecision& d);
json to_json(const ContinuityReport& r, const Graph& top);
json to_json(const CrossCheckReport& r, const Graph& g);

}  // namespace graphmonoid::io
