#include "graphmonoid/ck_limits.hpp"

#include <set>

#include "graphmonoid/error.hpp"
#include "graphmonoid/sampling.hpp"

namespace graphmonoid {

GraphMorphism identity_morphism(const Graph& g) {
  GraphMorphism m{g, g, {}, {}};
  for (const auto& v : g.vertices) m.vertex_map[v] = v;
  for (const auto& e : g.edges) m.edge_map[e.id] = e.id;
  return m;
}

GraphMorphism compose(const GraphMorphism& first, const GraphMorphism& second) {
  if (!(first.target == second.source))
    throw InvalidInput("cannot compose morphisms: middle graphs differ");
  GraphMorphism m{first.source, second.target, {}, {}};
  for (const auto& [v, w] : first.vertex_map) {
    auto it = second.vertex_map.find(w);
    if (it == second.vertex_map.end())
      throw InvalidInput("vertex '" + w + "' missing from the second map");
    m.vertex_map[v] = it->second;
  }
  for (const auto& [e, f] : first.edge_map) {
    auto it = second.edge_map.find(f);
    if (it == second.edge_map.end())
      throw InvalidInput("edge '" + f + "' missing from the second map");
    m.edge_map[e] = it->second;
  }
  return m;
}

std::vector<std::string> structural_violations(const GraphMorphism& m) {
  std::vector<std::string> out;
  for (const auto* g : {&m.source, &m.target}) {
    auto report = validate_graph(*g);
    for (const auto& v : report.violations) {
      out.push_back(std::string(g == &m.source ? "source" : "target") +
                    " graph: " + v.location + ": " + v.message);
    }
  }
  if (!out.empty()) return out;

  std::map<std::string, const Edge*> target_edges;
  for (const auto& e : m.target.edges) target_edges[e.id] = &e;

  for (const auto& v : m.source.vertices) {
    auto it = m.vertex_map.find(v);
    if (it == m.vertex_map.end()) {
      out.push_back("vertex '" + v + "' is not mapped");
    } else if (!m.target.has_vertex(it->second)) {
      out.push_back("vertex '" + v + "' maps to unknown vertex '" +
                    it->second + "'");
    }
  }
  for (const auto& [v, w] : m.vertex_map) {
    if (!m.source.has_vertex(v))
      out.push_back("vertex map mentions unknown source vertex '" + v + "'");
  }

  std::set<std::string> source_edges;
  for (const auto& e : m.source.edges) {
    source_edges.insert(e.id);
    auto it = m.edge_map.find(e.id);
    if (it == m.edge_map.end()) {
      out.push_back("edge '" + e.id + "' is not mapped");
      continue;
    }
    auto image = target_edges.find(it->second);
    if (image == target_edges.end()) {
      out.push_back("edge '" + e.id + "' maps to unknown edge '" + it->second +
                    "'");
      continue;
    }
    auto src = m.vertex_map.find(e.source);
    auto dst = m.vertex_map.find(e.range);
    if (src != m.vertex_map.end() && image->second->source != src->second)
      out.push_back("edge '" + e.id + "': source not preserved");
    if (dst != m.vertex_map.end() && image->second->range != dst->second)
      out.push_back("edge '" + e.id + "': range not preserved");
  }
  for (const auto& [e, f] : m.edge_map) {
    if (!source_edges.contains(e))
      out.push_back("edge map mentions unknown source edge '" + e + "'");
  }
  return out;
}

CkDecision is_ck_morphism(const GraphMorphism& m) {
  auto structural = structural_violations(m);
  if (!structural.empty())
    throw InvalidInput("not a graph morphism: " + structural.front());

  CkDecision d;
  std::map<std::string, std::string> seen;
  for (const auto& [v, w] : m.vertex_map) {
    auto [it, fresh] = seen.emplace(w, v);
    if (!fresh)
      d.violations.push_back("vertices '" + it->second + "' and '" + v +
                             "' both map to '" + w + "'");
  }
  seen.clear();
  for (const auto& [e, f] : m.edge_map) {
    auto [it, fresh] = seen.emplace(f, e);
    if (!fresh)
      d.violations.push_back("edges '" + it->second + "' and '" + e +
                             "' both map to '" + f + "'");
  }

  for (const auto& v : m.source.vertices) {
    const auto& w = m.vertex_map.at(v);
    switch (vertex_class(m.source, v)) {
      case VertexClass::sink:
        break;
      case VertexClass::infinite_emitter:
        if (vertex_class(m.target, w) != VertexClass::infinite_emitter)
          d.violations.push_back("infinite emitter '" + v + "' maps to '" + w +
                                 "', which is not an infinite emitter");
        break;
      case VertexClass::regular: {
        if (vertex_class(m.target, w) == VertexClass::infinite_emitter) {
          d.violations.push_back("regular vertex '" + v +
                                 "' maps to infinite emitter '" + w + "'");
          break;
        }
        auto from = out_edges(m.source, v).size();
        auto to = out_edges(m.target, w).size();
        if (from != to)
          d.violations.push_back("out-edges of regular vertex '" + v + "' (" +
                                 std::to_string(from) + ") are not in bijection"
                                 " with those of '" + w + "' (" +
                                 std::to_string(to) + ")");
        break;
      }
    }
  }
  d.is_ck = d.violations.empty();
  return d;
}

GeneratorMap induced_monoid_morphism(const GraphMorphism& m) {
  auto decision = is_ck_morphism(m);
  if (!decision.is_ck)
    throw InvalidInput("not a CK-morphism: " + decision.violations.front());

  GeneratorMap out;
  for (const auto& gen : generators(m.source)) {
    const auto& w = m.vertex_map.at(gen.vertex);
    if (gen.is_vertex()) {
      out[gen] = MonoidElement(Generator::of_vertex(w));
      continue;
    }
    auto edges = out_edges(m.source, gen.vertex);
    std::vector<std::size_t> image;
    for (auto n : gen.edges)
      image.push_back(edge_index(m.target, m.edge_map.at(edges.at(n).id)));
    out[gen] = MonoidElement(Generator::cofinite(w, std::move(image)));
  }
  return out;
}

void require_chain(const GraphChain& chain) {
  if (chain.graphs.empty()) throw InvalidInput("empty chain");
  if (chain.links.size() + 1 != chain.graphs.size())
    throw InvalidInput("a chain of " + std::to_string(chain.graphs.size()) +
                       " graphs needs " +
                       std::to_string(chain.graphs.size() - 1) + " links");
  for (std::size_t i = 0; i < chain.links.size(); ++i) {
    if (!(chain.links[i].source == chain.graphs[i]) ||
        !(chain.links[i].target == chain.graphs[i + 1]))
      throw InvalidInput("link " + std::to_string(i) +
                         " does not connect consecutive graphs");
  }
}

GraphMorphism chain_map(const GraphChain& chain, std::size_t i, std::size_t j) {
  if (i > j || j >= chain.graphs.size())
    throw InvalidInput("no chain map from level " + std::to_string(i) +
                       " to level " + std::to_string(j));
  GraphMorphism m = identity_morphism(chain.graphs[i]);
  for (std::size_t k = i; k < j; ++k) m = compose(m, chain.links[k]);
  return m;
}

GraphColimit colimit_graph(const GraphChain& chain) {
  require_chain(chain);
  for (std::size_t i = 0; i < chain.links.size(); ++i) {
    auto d = is_ck_morphism(chain.links[i]);
    if (!d.is_ck)
      throw InvalidInput("link " + std::to_string(i) + " is not CK: " +
                         d.violations.front());
  }
  GraphColimit c;
  c.top = chain.graphs.back();
  for (std::size_t i = 0; i < chain.graphs.size(); ++i)
    c.injections.push_back(chain_map(chain, i, chain.graphs.size() - 1));
  return c;
}

PresentationChain monoid_chain(const GraphChain& chain) {
  require_chain(chain);
  PresentationChain out;
  for (const auto& g : chain.graphs) out.levels.push_back(graph_monoid(g));
  for (const auto& link : chain.links)
    out.links.push_back(induced_monoid_morphism(link));
  return out;
}

MonoidColimit::MonoidColimit(PresentationChain chain, CompletionOptions options)
    : chain_(std::move(chain)) {
  if (chain_.levels.empty()) throw InvalidInput("empty chain");
  if (chain_.links.size() + 1 != chain_.levels.size())
    throw InvalidInput("chain needs one link per consecutive pair of levels");
  for (const auto& p : chain_.levels) systems_.push_back(complete(p, options));

  for (std::size_t i = 0; i < chain_.links.size(); ++i) {
    const auto& link = chain_.links[i];
    const auto& next = chain_.levels[i + 1];
    const std::string where = "link " + std::to_string(i) + ": ";
    for (const auto& g : chain_.levels[i].generators()) {
      auto it = link.find(g);
      if (it == link.end())
        throw InvalidInput(where + "generator " + to_string(g) + " unmapped");
      if (!next.contains(it->second))
        throw InvalidInput(where + "image of " + to_string(g) +
                           " leaves the next level's alphabet");
    }
    const auto& rels = chain_.levels[i].relations();
    for (std::size_t r = 0; r < rels.size(); ++r) {
      auto lhs = apply_generator_map(link, rels[r].lhs);
      auto rhs = apply_generator_map(link, rels[r].rhs);
      if (normal_form(systems_[i + 1], lhs) != normal_form(systems_[i + 1], rhs))
        throw InvalidInput(where + "relation " + std::to_string(r) +
                           " is not preserved");
    }
  }
}

MonoidElement MonoidColimit::push(std::size_t i, std::size_t j,
                                  const MonoidElement& s) const {
  if (i > j || j >= size())
    throw InvalidInput("no connecting map from level " + std::to_string(i) +
                       " to level " + std::to_string(j));
  MonoidElement x = s;
  for (std::size_t k = i; k < j; ++k) x = apply_generator_map(chain_.links[k], x);
  return x;
}

LimitElement MonoidColimit::inject(std::size_t i, MonoidElement s) const {
  if (i >= size()) throw InvalidInput("no level " + std::to_string(i));
  if (!chain_.levels[i].contains(s))
    throw InvalidInput("element outside the alphabet of level " +
                       std::to_string(i));
  return {i, std::move(s)};
}

std::optional<std::size_t> MonoidColimit::equivalence_level(
    const LimitElement& a, const LimitElement& b) const {
  for (std::size_t k = std::max(a.level, b.level); k < size(); ++k) {
    if (normal_form(systems_[k], push(a.level, k, a.representative)) ==
        normal_form(systems_[k], push(b.level, k, b.representative)))
      return k;
  }
  return std::nullopt;
}

bool MonoidColimit::equivalent(const LimitElement& a,
                               const LimitElement& b) const {
  return equivalence_level(a, b).has_value();
}

LimitElement MonoidColimit::add(const LimitElement& a,
                                const LimitElement& b) const {
  const std::size_t k = std::max(a.level, b.level);
  return {k, push(a.level, k, a.representative) +
                 push(b.level, k, b.representative)};
}

MonoidElement UniversalMap::operator()(const LimitElement& x) const {
  if (x.level >= family_.size())
    throw InvalidInput("no level " + std::to_string(x.level));
  return apply_generator_map(family_[x.level], x.representative);
}

UniversalMap universal_map(const MonoidColimit& colimit,
                           std::vector<GeneratorMap> family,
                           const Presentation& target,
                           CompletionOptions options) {
  if (family.size() != colimit.size())
    throw InvalidInput("family needs one map per level");
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (const auto& g : colimit.level(i).generators()) {
      auto it = family[i].find(g);
      if (it == family[i].end() || !target.contains(it->second))
        throw InvalidInput("map " + std::to_string(i) + " is not defined into "
                           "the target on " + to_string(g));
    }
  }
  auto system = complete(target, options);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      for (const auto& g : colimit.level(i).generators()) {
        MonoidElement direct = family[i].at(g);
        MonoidElement via =
            apply_generator_map(family[j], colimit.push(i, j, MonoidElement(g)));
        if (direct != via &&
            normal_form(system, direct) != normal_form(system, via))
          throw InvalidInput("incompatible family at generator " +
                             to_string(g) + ": map " + std::to_string(i) +
                             " differs from map " + std::to_string(j) +
                             " after the connecting map");
      }
    }
  }
  UniversalMap u;
  u.family_ = std::move(family);
  return u;
}

ContinuityReport check_continuity(const GraphChain& chain, std::size_t degree,
                                  CompletionOptions options) {
  GraphColimit colimit = colimit_graph(chain);
  MonoidColimit limit(monoid_chain(chain), options);
  const std::size_t top_level = chain.graphs.size() - 1;
  const RewriteSystem& top = limit.system(top_level);

  ContinuityReport report;
  report.levels = chain.graphs.size();
  report.degree = degree;

  // Top class -> sampled limit elements landing in it, first one the
  // representative.
  std::map<MonoidElement, std::vector<LimitElement>> classes;
  std::set<MonoidElement> sample;
  std::set<Generator> reached;
  for (std::size_t level = 0; level < chain.graphs.size(); ++level) {
    const Presentation& p = limit.level(level);
    if (level > 0) {
      std::set<MonoidElement> pushed;
      for (const auto& s : sample) pushed.insert(limit.push(level - 1, level, s));
      sample.swap(pushed);
    }
    for (auto& x : elements_up_to_degree(p.generators(), degree))
      sample.insert(std::move(x));

    GeneratorMap to_top = induced_monoid_morphism(colimit.injections[level]);
    for (const auto& [g, image] : to_top) reached.insert(image.terms().begin()->first);

    std::set<MonoidElement> level_forms, top_forms;
    for (const auto& s : sample) {
      MonoidElement direct = normal_form(top, apply_generator_map(to_top, s));
      MonoidElement pushed = limit.push(level, top_level, s);
      if (normal_form(top, pushed) != direct) {
        report.counterexamples.push_back(
            {{level, s}, {top_level, pushed}, true, false});
      }
      level_forms.insert(normal_form(limit.system(level), s));
      top_forms.insert(direct);
      classes[direct].push_back({level, s});
    }
    report.elements_checked += sample.size();
    report.level_collapses += level_forms.size() - top_forms.size();
  }

  std::vector<const LimitElement*> representatives;
  for (const auto& [form, members] : classes) {
    representatives.push_back(&members.front());
    for (std::size_t i = 1; i < members.size(); ++i) {
      ++report.pairs_checked;
      if (!limit.equivalent(members.front(), members[i]))
        report.counterexamples.push_back({members.front(), members[i], false, true});
    }
  }
  for (std::size_t i = 0; i < representatives.size(); ++i) {
    for (std::size_t j = i + 1; j < representatives.size(); ++j) {
      ++report.pairs_checked;
      if (limit.equivalent(*representatives[i], *representatives[j]))
        report.counterexamples.push_back(
            {*representatives[i], *representatives[j], true, false});
    }
  }
  report.classes_checked = classes.size();

  for (const auto& g : limit.level(top_level).generators()) {
    ++report.generators_checked;
    if (!reached.contains(g)) report.unreached_generators.push_back(g);
  }
  return report;
}

}  // namespace graphmonoid
