#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace graphmonoid {

struct Edge {
  std::string id;
  std::string source;
  std::string range;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Ranges of the countable out-edge family e_0^v, e_1^v, ... of an infinite
// emitter: a finite prefix followed by a cycle repeated forever.
struct EdgeIndexDescriptor {
  std::vector<std::string> prefix;
  std::vector<std::string> cycle;

  // Range of e_n^v. Throws InvalidInput when the cycle is empty.
  const std::string& range_at(std::size_t n) const;

  friend bool operator==(const EdgeIndexDescriptor&,
                         const EdgeIndexDescriptor&) = default;
};

struct InfiniteEmitter {
  EdgeIndexDescriptor descriptor;
  // Number k of edges e_0^v .. e_{k-1}^v present in Graph::edges.
  std::size_t materialized = 0;

  friend bool operator==(const InfiniteEmitter&,
                         const InfiniteEmitter&) = default;
};

enum class VertexClass { regular, sink, infinite_emitter };

std::string_view to_string(VertexClass c);

// A directed graph whose infinite emitters carry a finite description of
// their out-edge family. The materialized edges of an infinite emitter v are
// the edges with source v, in the order they appear in `edges`; the n-th of
// them is e_n^v.
//
// A Graph may be in an invalid state (this is what validate_graph reports
// on); every other operation expects a valid graph.
struct Graph {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::map<std::string, InfiniteEmitter> infinite_emitters;

  Graph& add_vertex(std::string id);
  Graph& add_edge(std::string id, std::string source, std::string range);
  // Declares v an infinite emitter; edges already present with source v
  // count as materialized.
  Graph& add_infinite_emitter(std::string v, EdgeIndexDescriptor descriptor);

  bool has_vertex(std::string_view v) const;
  bool is_infinite_emitter(std::string_view v) const;

  friend bool operator==(const Graph&, const Graph&) = default;
};

struct Violation {
  std::string location;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

ValidationReport validate_graph(const Graph& g);

// Throws InvalidInput carrying the first few violations when g is invalid.
void require_valid(const Graph& g);

// Throws InvalidInput for an unknown vertex.
VertexClass vertex_class(const Graph& g, std::string_view v);

// Materialized out-edges of v. Regular vertices list edges in the order of
// Graph::edges; infinite emitters list e_0^v, e_1^v, ... by index.
std::vector<Edge> out_edges(const Graph& g, std::string_view v);

// Index n of edge `edge_id` within the out-edge enumeration of its source.
std::size_t edge_index(const Graph& g, std::string_view edge_id);

// Default id of the materialized edge e_n^v.
std::string materialized_edge_name(std::string_view v, std::size_t n);

// Instantiates e_0^v .. e_{k-1}^v of the infinite emitter v. Existing edges
// keep their ids; new ones are named by materialized_edge_name.
Graph materialize_edges(const Graph& g, std::string_view v, std::size_t k);

bool is_row_finite(const Graph& g);

std::vector<std::string> sinks(const Graph& g);

}  // namespace graphmonoid
