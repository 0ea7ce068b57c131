#include "graphmonoid/json_io.hpp"

#include <fstream>
#include <sstream>

#include "graphmonoid/error.hpp"

namespace graphmonoid::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InvalidInput(where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::string string_at(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

std::uint64_t count_at(const json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    fail(where, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

const json& array_at(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::vector<std::string> strings_at(const json& j, const std::string& where) {
  std::vector<std::string> out;
  const auto& a = array_at(j, where);
  for (std::size_t i = 0; i < a.size(); ++i)
    out.push_back(string_at(a[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

json parse(std::string_view text, std::string_view origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string(origin) + ": malformed JSON: " + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path);
}

Graph graph_from_json(const json& j) {
  Graph g;
  const auto& vertices = array_at(field(j, "vertices", "graph"), "graph.vertices");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string where = "graph.vertices[" + std::to_string(i) + "]";
    if (vertices[i].is_object())
      g.add_vertex(string_at(field(vertices[i], "id", where), where + ".id"));
    else
      g.add_vertex(string_at(vertices[i], where));
  }
  if (j.contains("edges")) {
    const auto& edges = array_at(j["edges"], "graph.edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string where = "graph.edges[" + std::to_string(i) + "]";
      g.add_edge(string_at(field(edges[i], "id", where), where + ".id"),
                 string_at(field(edges[i], "src", where), where + ".src"),
                 string_at(field(edges[i], "dst", where), where + ".dst"));
    }
  }
  if (j.contains("infinite_emitters")) {
    const auto& emitters = j["infinite_emitters"];
    if (!emitters.is_object()) fail("graph.infinite_emitters", "expected an object");
    for (const auto& [v, entry] : emitters.items()) {
      const std::string where = "graph.infinite_emitters." + v;
      EdgeIndexDescriptor d;
      if (entry.contains("prefix"))
        d.prefix = strings_at(entry["prefix"], where + ".prefix");
      d.cycle = strings_at(field(entry, "cycle", where), where + ".cycle");
      g.add_infinite_emitter(v, d);
      if (!entry.contains("materialized")) continue;
      const auto k = count_at(entry["materialized"], where + ".materialized");
      auto& emitter = g.infinite_emitters.at(v);
      if (emitter.materialized == 0 && k > 0 && !d.cycle.empty() &&
          g.has_vertex(v)) {
        g = materialize_edges(g, v, k);
      } else {
        emitter.materialized = k;  // a mismatch is left for validation
      }
    }
  }
  return g;
}

json to_json(const Graph& g) {
  json j;
  j["vertices"] = g.vertices;
  j["edges"] = json::array();
  for (const auto& e : g.edges)
    j["edges"].push_back({{"id", e.id}, {"src", e.source}, {"dst", e.range}});
  if (!g.infinite_emitters.empty()) {
    json em = json::object();
    for (const auto& [v, e] : g.infinite_emitters) {
      em[v] = {{"prefix", e.descriptor.prefix},
               {"cycle", e.descriptor.cycle},
               {"materialized", e.materialized}};
    }
    j["infinite_emitters"] = em;
  }
  return j;
}

json to_json(const Desingularization& d) {
  json j = to_json(d.graph);
  json vertices = json::array();
  for (const auto& v : d.graph.vertices) {
    if (d.is_boundary(v))
      vertices.push_back({{"id", v}, {"boundary", true}});
    else
      vertices.push_back(v);
  }
  j["vertices"] = vertices;
  return j;
}

MonoidElement element_from_json(const json& j, const Graph& g) {
  MonoidElement x;
  const auto& terms = array_at(field(j, "terms", "element"), "element.terms");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "element.terms[" + std::to_string(i) + "]";
    const auto& gen = field(terms[i], "gen", where);
    const std::string kind = string_at(field(gen, "kind", where + ".gen"),
                                       where + ".gen.kind");
    const std::string v = string_at(field(gen, "v", where + ".gen"),
                                    where + ".gen.v");
    const std::uint64_t mult =
        terms[i].contains("mult") ? count_at(terms[i]["mult"], where + ".mult")
                                  : 1;
    if (!g.has_vertex(v)) fail(where, "unknown vertex '" + v + "'");
    if (kind == "v") {
      x.add(Generator::of_vertex(v), mult);
    } else if (kind == "vS") {
      if (!g.is_infinite_emitter(v))
        fail(where, "'" + v + "' is not an infinite emitter");
      std::vector<std::size_t> indices;
      for (const auto& id : strings_at(field(gen, "S", where + ".gen"),
                                       where + ".gen.S")) {
        bool found = false;
        for (const auto& e : g.edges) {
          if (e.id == id && e.source == v) found = true;
        }
        if (!found) fail(where, "'" + id + "' is not a materialized edge of '" + v + "'");
        indices.push_back(edge_index(g, id));
      }
      if (indices.empty()) fail(where, "edge set must be non-empty");
      x.add(Generator::cofinite(v, std::move(indices)), mult);
    } else {
      fail(where + ".gen.kind", "expected \"v\" or \"vS\"");
    }
  }
  return x;
}

json to_json(const Generator& gen, const Graph& g) {
  if (gen.is_vertex()) return {{"kind", "v"}, {"v", gen.vertex}};
  auto edges = out_edges(g, gen.vertex);
  json ids = json::array();
  for (auto n : gen.edges) {
    if (n >= edges.size())
      throw InvalidInput(to_string(gen) + " names an unmaterialized edge");
    ids.push_back(edges[n].id);
  }
  return {{"kind", "vS"}, {"v", gen.vertex}, {"S", ids}};
}

json to_json(const MonoidElement& x, const Graph& g) {
  json terms = json::array();
  for (const auto& [gen, n] : x.terms())
    terms.push_back({{"gen", to_json(gen, g)}, {"mult", n}});
  return {{"terms", terms}};
}

json to_json(const Presentation& p, const Graph& g) {
  json gens = json::array();
  for (const auto& gen : p.generators()) gens.push_back(to_json(gen, g));
  json rels = json::array();
  for (const auto& r : p.relations()) {
    rels.push_back({{"kind", std::string(to_string(r.kind))},
                    {"lhs", to_json(r.lhs, g)},
                    {"rhs", to_json(r.rhs, g)}});
  }
  return {{"generators", gens}, {"relations", rels}};
}

json to_json(const EqualityCertificate& c, const Graph& g) {
  json chain = json::array();
  for (const auto& step : c.chain) {
    chain.push_back({{"relation", step.relation},
                     {"direction", step.forward ? "forward" : "backward"},
                     {"context", to_json(step.context, g)}});
  }
  return {{"kind", std::string(to_string(c.kind))},
          {"lhs_normal_form", to_json(c.lhs_normal_form, g)},
          {"rhs_normal_form", to_json(c.rhs_normal_form, g)},
          {"chain", chain}};
}

SinkVector sink_vector_from_json(const json& j) {
  if (!j.is_object()) fail("sink vector", "expected an object");
  SinkVector out;
  for (const auto& [s, n] : j.items()) {
    auto k = count_at(n, "sink vector." + s);
    if (k > 0) out[s] = k;
  }
  return out;
}

json to_json(const SinkVector& x) {
  json j = json::object();
  for (const auto& [s, n] : x) j[s] = n;
  return j;
}

GraphMorphism morphism_from_json(const json& j, Graph source, Graph target) {
  GraphMorphism m{std::move(source), std::move(target), {}, {}};
  for (const char* key : {"vertex_map", "edge_map"}) {
    const auto& map = field(j, key, "morphism");
    if (!map.is_object()) fail(std::string("morphism.") + key, "expected an object");
    auto& out = std::string_view(key) == "vertex_map" ? m.vertex_map : m.edge_map;
    for (const auto& [k, v] : map.items())
      out[k] = string_at(v, std::string("morphism.") + key + "." + k);
  }
  return m;
}

json to_json(const GraphMorphism& m) {
  json vm = json::object();
  for (const auto& [k, v] : m.vertex_map) vm[k] = v;
  json em = json::object();
  for (const auto& [k, v] : m.edge_map) em[k] = v;
  return {{"vertex_map", vm}, {"edge_map", em}};
}

GraphChain chain_from_json(const json& j) {
  GraphChain chain;
  const auto& graphs = array_at(field(j, "graphs", "system"), "system.graphs");
  for (const auto& g : graphs) chain.graphs.push_back(graph_from_json(g));
  const auto& links = j.contains("morphisms")
                          ? array_at(j["morphisms"], "system.morphisms")
                          : json::array();
  if (chain.graphs.empty()) fail("system.graphs", "needs at least one graph");
  if (links.size() + 1 != chain.graphs.size())
    fail("system.morphisms", "expected one morphism per consecutive pair of graphs");
  for (std::size_t i = 0; i < links.size(); ++i) {
    chain.links.push_back(
        morphism_from_json(links[i], chain.graphs[i], chain.graphs[i + 1]));
  }
  return chain;
}

json to_json(const ValidationReport& r, const Graph& g) {
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"location", v.location}, {"message", v.message}});
  json j = {{"valid", r.ok()}, {"violations", violations}};
  if (r.ok()) {
    json classes = json::object();
    for (const auto& v : g.vertices)
      classes[v] = std::string(to_string(vertex_class(g, v)));
    j["classes"] = classes;
  }
  return j;
}

json to_json(const CkDecision& d) {
  return {{"is_ck", d.is_ck}, {"violations", d.violations}};
}

json to_json(const ContinuityReport& r, const Graph& top) {
  auto limit_element = [](const LimitElement& x) {
    return json{{"level", x.level}, {"representative", to_string(x.representative)}};
  };
  json counterexamples = json::array();
  for (const auto& c : r.counterexamples) {
    counterexamples.push_back({{"lhs", limit_element(c.lhs)},
                               {"rhs", limit_element(c.rhs)},
                               {"equivalent_in_limit", c.equivalent_in_limit},
                               {"equal_at_top", c.equal_at_top}});
  }
  json unreached = json::array();
  for (const auto& g : r.unreached_generators) unreached.push_back(to_json(g, top));
  return {{"ok", r.ok()},
          {"levels", r.levels},
          {"degree", r.degree},
          {"elements_checked", r.elements_checked},
          {"classes_checked", r.classes_checked},
          {"pairs_checked", r.pairs_checked},
          {"generators_checked", r.generators_checked},
          {"level_collapses", r.level_collapses},
          {"counterexamples", counterexamples},
          {"unreached_generators", unreached}};
}

json to_json(const CrossCheckReport& r, const Graph& g) {
  json details = json::array();
  for (const auto& d : r.discrepancies) {
    details.push_back({{"lhs", to_json(d.lhs, g)},
                       {"rhs", to_json(d.rhs, g)},
                       {"rewriting_equal", d.rewriting_equal},
                       {"lhs_vector", to_json(d.lhs_vector)},
                       {"rhs_vector", to_json(d.rhs_vector)}});
  }
  return {{"agreements", r.agreements},
          {"discrepancies", r.discrepancies.size()},
          {"equal_pairs", r.equal_pairs},
          {"discrepancy_details", details}};
}

}  // namespace graphmonoid::io
