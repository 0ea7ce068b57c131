#include "graphmonoid/graph.hpp"

#include <algorithm>
#include <set>

#include "graphmonoid/error.hpp"

namespace graphmonoid {

const std::string& EdgeIndexDescriptor::range_at(std::size_t n) const {
  if (n < prefix.size()) return prefix[n];
  if (cycle.empty())
    throw InvalidInput("edge descriptor has an empty cycle");
  return cycle[(n - prefix.size()) % cycle.size()];
}

std::string_view to_string(VertexClass c) {
  switch (c) {
    case VertexClass::regular:
      return "regular";
    case VertexClass::sink:
      return "sink";
    case VertexClass::infinite_emitter:
      return "infinite_emitter";
  }
  return "unknown";
}

Graph& Graph::add_vertex(std::string id) {
  vertices.push_back(std::move(id));
  return *this;
}

Graph& Graph::add_edge(std::string id, std::string source, std::string range) {
  auto emitter = infinite_emitters.find(source);
  if (emitter != infinite_emitters.end()) ++emitter->second.materialized;
  edges.push_back({std::move(id), std::move(source), std::move(range)});
  return *this;
}

Graph& Graph::add_infinite_emitter(std::string v,
                                   EdgeIndexDescriptor descriptor) {
  auto present = static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(),
                    [&](const Edge& e) { return e.source == v; }));
  infinite_emitters[std::move(v)] = {std::move(descriptor), present};
  return *this;
}

bool Graph::has_vertex(std::string_view v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool Graph::is_infinite_emitter(std::string_view v) const {
  return infinite_emitters.find(std::string(v)) != infinite_emitters.end();
}

ValidationReport validate_graph(const Graph& g) {
  ValidationReport report;
  auto add = [&](std::string location, std::string message) {
    report.violations.push_back({std::move(location), std::move(message)});
  };

  std::set<std::string> vertex_set;
  for (const auto& v : g.vertices) {
    if (!vertex_set.insert(v).second)
      add("vertex " + v, "duplicate vertex id");
  }

  std::set<std::string> edge_ids;
  for (const auto& e : g.edges) {
    if (!edge_ids.insert(e.id).second) add("edge " + e.id, "duplicate edge id");
    if (!vertex_set.contains(e.source))
      add("edge " + e.id, "source '" + e.source + "' is not a vertex");
    if (!vertex_set.contains(e.range))
      add("edge " + e.id, "range '" + e.range + "' is not a vertex");
  }

  for (const auto& [v, emitter] : g.infinite_emitters) {
    const std::string where = "infinite emitter " + v;
    if (!vertex_set.contains(v)) add(where, "not a vertex");
    const auto& d = emitter.descriptor;
    if (d.cycle.empty()) add(where, "descriptor cycle is empty");
    for (const auto* list : {&d.prefix, &d.cycle}) {
      for (const auto& w : *list) {
        if (!vertex_set.contains(w))
          add(where, "descriptor names unknown vertex '" + w + "'");
      }
    }

    std::size_t n = 0;
    for (const auto& e : g.edges) {
      if (e.source != v) continue;
      if (!d.cycle.empty() && e.range != d.range_at(n)) {
        add(where + " index " + std::to_string(n),
            "edge " + e.id + " has range '" + e.range +
                "' but the descriptor prescribes '" + d.range_at(n) + "'");
      }
      ++n;
    }
    if (n != emitter.materialized) {
      add(where, "declares " + std::to_string(emitter.materialized) +
                     " materialized edges but " + std::to_string(n) +
                     " are present");
    }
  }
  return report;
}

void require_valid(const Graph& g) {
  auto report = validate_graph(g);
  if (report.ok()) return;
  std::string message = "invalid graph:";
  std::size_t shown = 0;
  for (const auto& v : report.violations) {
    if (shown++ == 3) {
      message += " ...";
      break;
    }
    message += " [" + v.location + ": " + v.message + "]";
  }
  throw InvalidInput(message);
}

VertexClass vertex_class(const Graph& g, std::string_view v) {
  if (!g.has_vertex(v))
    throw InvalidInput("unknown vertex '" + std::string(v) + "'");
  if (g.is_infinite_emitter(v)) return VertexClass::infinite_emitter;
  bool emits = std::any_of(g.edges.begin(), g.edges.end(),
                           [&](const Edge& e) { return e.source == v; });
  return emits ? VertexClass::regular : VertexClass::sink;
}

std::vector<Edge> out_edges(const Graph& g, std::string_view v) {
  if (!g.has_vertex(v))
    throw InvalidInput("unknown vertex '" + std::string(v) + "'");
  std::vector<Edge> result;
  for (const auto& e : g.edges) {
    if (e.source == v) result.push_back(e);
  }
  return result;
}

std::size_t edge_index(const Graph& g, std::string_view edge_id) {
  auto it = std::find_if(g.edges.begin(), g.edges.end(),
                         [&](const Edge& e) { return e.id == edge_id; });
  if (it == g.edges.end())
    throw InvalidInput("unknown edge '" + std::string(edge_id) + "'");
  return static_cast<std::size_t>(
      std::count_if(g.edges.begin(), it,
                    [&](const Edge& e) { return e.source == it->source; }));
}

std::string materialized_edge_name(std::string_view v, std::size_t n) {
  return "e" + std::to_string(n) + "^" + std::string(v);
}

Graph materialize_edges(const Graph& g, std::string_view v, std::size_t k) {
  auto it = g.infinite_emitters.find(std::string(v));
  if (it == g.infinite_emitters.end())
    throw InvalidInput("vertex '" + std::string(v) +
                       "' is not an infinite emitter");
  const std::size_t current = it->second.materialized;
  if (k < current) {
    throw InvalidInput("cannot materialize " + std::to_string(k) +
                       " edges of '" + std::string(v) + "': " +
                       std::to_string(current) + " already materialized");
  }

  Graph result = g;
  for (std::size_t n = current; n < k; ++n) {
    std::string id = materialized_edge_name(v, n);
    bool taken = std::any_of(result.edges.begin(), result.edges.end(),
                             [&](const Edge& e) { return e.id == id; });
    if (taken)
      throw InvalidInput("edge id '" + id + "' already in use");
    result.add_edge(std::move(id), std::string(v),
                    it->second.descriptor.range_at(n));
  }
  return result;
}

bool is_row_finite(const Graph& g) { return g.infinite_emitters.empty(); }

std::vector<std::string> sinks(const Graph& g) {
  std::vector<std::string> result;
  for (const auto& v : g.vertices) {
    if (vertex_class(g, v) == VertexClass::sink) result.push_back(v);
  }
  return result;
}

}  // namespace graphmonoid
