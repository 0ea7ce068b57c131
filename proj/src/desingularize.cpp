#include "graphmonoid/desingularize.hpp"

#include <algorithm>
#include <numeric>

#include "graphmonoid/error.hpp"

namespace graphmonoid {

std::string tail_vertex_name(std::string_view v, std::size_t n) {
  return "w" + std::to_string(n) + "(" + std::string(v) + ")";
}

std::string redistributed_edge_name(std::string_view v, std::size_t n) {
  return "f" + std::to_string(n) + "^" + std::string(v);
}

std::string tail_edge_name(std::string_view v, std::size_t n) {
  return "g" + std::to_string(n) + "^" + std::string(v);
}

std::optional<TailPosition> Desingularization::locate(
    std::string_view f_vertex) const {
  auto it = positions.find(std::string(f_vertex));
  if (it == positions.end()) return std::nullopt;
  return it->second;
}

bool Desingularization::is_boundary(std::string_view f_vertex) const {
  return boundary.contains(std::string(f_vertex));
}

Desingularization desingularize(const Graph& g, std::size_t level) {
  require_valid(g);
  if (level == 0) throw InvalidInput("truncation level must be at least 1");

  Desingularization d;
  d.source = g;
  d.level = level;
  Graph& f = d.graph;

  auto add_tail_vertex = [&](const std::string& v, std::size_t n) {
    std::string name = tail_vertex_name(v, n);
    f.add_vertex(name);
    d.positions[name] = {v, n};
    if (n == level) d.boundary.insert(name);
  };

  for (const auto& v : g.vertices) {
    add_tail_vertex(v, 0);
    if (vertex_class(g, v) == VertexClass::regular) continue;
    for (std::size_t n = 1; n <= level; ++n) add_tail_vertex(v, n);
  }

  for (const auto& v : g.vertices) {
    switch (vertex_class(g, v)) {
      case VertexClass::regular: {
        auto edges = out_edges(g, v);
        for (std::size_t n = 0; n < edges.size(); ++n) {
          f.add_edge(redistributed_edge_name(v, n), tail_vertex_name(v, 0),
                     tail_vertex_name(edges[n].range, 0));
        }
        break;
      }
      case VertexClass::sink:
        for (std::size_t n = 0; n < level; ++n) {
          f.add_edge(tail_edge_name(v, n), tail_vertex_name(v, n),
                     tail_vertex_name(v, n + 1));
        }
        break;
      case VertexClass::infinite_emitter: {
        const auto& descriptor = g.infinite_emitters.at(v).descriptor;
        for (std::size_t n = 0; n < level; ++n) {
          f.add_edge(tail_edge_name(v, n), tail_vertex_name(v, n),
                     tail_vertex_name(v, n + 1));
          f.add_edge(redistributed_edge_name(v, n), tail_vertex_name(v, n),
                     tail_vertex_name(descriptor.range_at(n), 0));
        }
        break;
      }
    }
  }
  return d;
}

namespace {

MonoidElement tail_generator(std::string_view v, std::size_t n) {
  return MonoidElement(Generator::of_vertex(tail_vertex_name(v, n)));
}

}  // namespace

std::size_t required_truncation(const MonoidElement& x) {
  std::size_t level = 2;
  for (const auto& [g, n] : x.terms()) {
    if (!g.is_vertex()) level = std::max(level, g.max_index() + 2);
  }
  return level;
}

MonoidElement phi(const Desingularization& d, const MonoidElement& x) {
  MonoidElement result;
  for (const auto& [gen, mult] : x.terms()) {
    if (!d.source.has_vertex(gen.vertex))
      throw InvalidInput("unknown vertex '" + gen.vertex + "'");
    if (gen.is_vertex()) {
      result += mult * tail_generator(gen.vertex, 0);
      continue;
    }
    auto emitter = d.source.infinite_emitters.find(gen.vertex);
    if (emitter == d.source.infinite_emitters.end())
      throw InvalidInput(to_string(gen) + " names a non-emitter");
    const std::size_t n = gen.max_index();
    if (n + 1 > d.level)
      throw TruncationError(d.level, required_truncation(x));

    MonoidElement image = tail_generator(gen.vertex, n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      if (std::binary_search(gen.edges.begin(), gen.edges.end(), k)) continue;
      image += tail_generator(emitter->second.descriptor.range_at(k), 0);
    }
    result += mult * image;
  }
  return result;
}

GeneratorMap phi_map(const Desingularization& d) {
  GeneratorMap m;
  for (const auto& gen : generators(d.source)) {
    if (!gen.is_vertex() && gen.max_index() + 1 > d.level) continue;
    m[gen] = phi(d, MonoidElement(gen));
  }
  return m;
}

MonoidElement psi(const Desingularization& d, const MonoidElement& y) {
  MonoidElement result;
  for (const auto& [gen, mult] : y.terms()) {
    auto pos = gen.is_vertex() ? d.locate(gen.vertex) : std::nullopt;
    if (!pos)
      throw InvalidInput(to_string(gen) +
                         " is not a generator of the desingularized graph");
    if (pos->n == 0) {
      result.add(Generator::of_vertex(pos->vertex), mult);
      continue;
    }
    auto emitter = d.source.infinite_emitters.find(pos->vertex);
    if (emitter == d.source.infinite_emitters.end()) {
      result.add(Generator::of_vertex(pos->vertex), mult);  // sink tail
      continue;
    }
    if (emitter->second.materialized < pos->n) {
      throw InvalidInput(
          "psi of " + gen.vertex + " needs edges e_0.." +
          std::to_string(pos->n - 1) + " of '" + pos->vertex +
          "' materialized, only " +
          std::to_string(emitter->second.materialized) + " are");
    }
    std::vector<std::size_t> prefix(pos->n);
    std::iota(prefix.begin(), prefix.end(), std::size_t{0});
    result.add(Generator::cofinite(pos->vertex, std::move(prefix)), mult);
  }
  return result;
}

GeneratorMap psi_map(const Desingularization& d) {
  GeneratorMap m;
  for (const auto& v : d.graph.vertices) {
    Generator gen = Generator::of_vertex(v);
    auto pos = d.locate(v);
    auto emitter = d.source.infinite_emitters.find(pos->vertex);
    if (emitter != d.source.infinite_emitters.end() &&
        emitter->second.materialized < pos->n)
      continue;
    m[gen] = psi(d, MonoidElement(gen));
  }
  return m;
}

}  // namespace graphmonoid
