#include "graphmonoid/api.hpp"

#include "graphmonoid/error.hpp"
#include "graphmonoid/sampling.hpp"

namespace graphmonoid::api {

namespace {

Graph load_valid(const json& j) {
  Graph g = io::graph_from_json(j);
  require_valid(g);
  return g;
}

CompletionOptions completion(const Options& opts) { return {opts.budget}; }

GraphMorphism load_morphism(const json& source, const json& target,
                            const json& morphism) {
  return io::morphism_from_json(morphism, load_valid(source), load_valid(target));
}

}  // namespace

json validate(const json& graph) {
  Graph g = io::graph_from_json(graph);
  return io::to_json(validate_graph(g), g);
}

json present(const json& graph) {
  Graph g = load_valid(graph);
  return io::to_json(graph_monoid(g), g);
}

json normal_form(const json& graph, const json& element, const Options& opts) {
  Graph g = load_valid(graph);
  MonoidElement x = io::element_from_json(element, g);
  RewriteSystem rs = complete(graph_monoid(g), completion(opts));
  return {{"normal_form", io::to_json(graphmonoid::normal_form(rs, x), g)},
          {"term_order", std::string(rs.term_order())},
          {"rules", rs.rule_words().size()}};
}

json equal(const json& graph, const json& lhs, const json& rhs,
           const Options& opts) {
  Graph g = load_valid(graph);
  MonoidElement u = io::element_from_json(lhs, g);
  MonoidElement v = io::element_from_json(rhs, g);
  RewriteSystem rs = complete(graph_monoid(g), completion(opts));
  EqualityResult r = graphmonoid::equal(rs, u, v);
  return {{"equal", r.equal}, {"certificate", io::to_json(r.certificate, g)}};
}

json desingularize(const json& graph, std::size_t level) {
  return io::to_json(graphmonoid::desingularize(load_valid(graph), level));
}

json phi(const json& graph, const json& element,
         std::optional<std::size_t> level) {
  Graph g = load_valid(graph);
  MonoidElement x = io::element_from_json(element, g);
  const std::size_t n = level.value_or(required_truncation(x));
  Desingularization d = graphmonoid::desingularize(g, n);
  return {{"level", n}, {"image", io::to_json(graphmonoid::phi(d, x), d.graph)}};
}

json psi(const json& graph, const json& element, std::size_t level) {
  Graph g = load_valid(graph);
  Desingularization d = graphmonoid::desingularize(g, level);
  MonoidElement y = io::element_from_json(element, d.graph);
  return {{"level", level}, {"image", io::to_json(graphmonoid::psi(d, y), g)}};
}

json ck_check(const json& source, const json& target, const json& morphism) {
  return io::to_json(is_ck_morphism(load_morphism(source, target, morphism)));
}

json induced_map(const json& source, const json& target, const json& morphism) {
  GraphMorphism m = load_morphism(source, target, morphism);
  json entries = json::array();
  for (const auto& [gen, image] : induced_monoid_morphism(m)) {
    entries.push_back({{"gen", io::to_json(gen, m.source)},
                       {"image", io::to_json(image, m.target)}});
  }
  return {{"map", entries}};
}

json colimit(const json& system) {
  GraphColimit c = colimit_graph(io::chain_from_json(system));
  json injections = json::array();
  for (const auto& m : c.injections) injections.push_back(io::to_json(m));
  return {{"top", io::to_json(c.top)}, {"injections", injections}};
}

json continuity_check(const json& system, std::size_t degree,
                      const Options& opts) {
  GraphChain chain = io::chain_from_json(system);
  ContinuityReport r = check_continuity(chain, degree, completion(opts));
  return io::to_json(r, chain.graphs.back());
}

json oracle_check(const json& graph, std::size_t samples,
                  std::size_t max_degree, const Options& opts) {
  Graph g = load_valid(graph);
  Rng rng(opts.seed);
  auto pairs = sample_pairs(graph_monoid(g), samples, max_degree, rng);
  return io::to_json(cross_check(g, pairs, completion(opts)), g);
}

}  // namespace graphmonoid::api
