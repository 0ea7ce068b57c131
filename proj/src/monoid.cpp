#include "graphmonoid/monoid.hpp"

#include <algorithm>

#include "graphmonoid/error.hpp"

namespace graphmonoid {

Generator Generator::of_vertex(std::string v) { return {std::move(v), {}}; }

Generator Generator::cofinite(std::string v, std::vector<std::size_t> indices) {
  if (indices.empty())
    throw InvalidInput("cofinite generator of '" + v +
                       "' needs a non-empty edge set");
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return {std::move(v), std::move(indices)};
}

std::strong_ordering Generator::operator<=>(const Generator& other) const {
  if (is_vertex() != other.is_vertex())
    return is_vertex() ? std::strong_ordering::less
                       : std::strong_ordering::greater;
  if (auto c = vertex <=> other.vertex; c != 0) return c;
  return edges <=> other.edges;
}

std::string to_string(const Generator& g) {
  if (g.is_vertex()) return "a_" + g.vertex;
  std::string s = "a_{" + g.vertex + ",{";
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(g.edges[i]);
  }
  return s + "}}";
}

MonoidElement::MonoidElement(Generator g, std::uint64_t multiplicity) {
  add(g, multiplicity);
}

std::uint64_t MonoidElement::degree() const {
  std::uint64_t d = 0;
  for (const auto& [g, n] : terms_) d += n;
  return d;
}

std::uint64_t MonoidElement::multiplicity(const Generator& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? 0 : it->second;
}

MonoidElement& MonoidElement::add(const Generator& g, std::uint64_t n) {
  if (n != 0) terms_[g] += n;
  return *this;
}

MonoidElement& MonoidElement::operator+=(const MonoidElement& other) {
  for (const auto& [g, n] : other.terms_) terms_[g] += n;
  return *this;
}

MonoidElement operator*(std::uint64_t n, const MonoidElement& x) {
  MonoidElement result;
  if (n == 0) return result;
  for (const auto& [g, m] : x.terms_) result.terms_[g] = n * m;
  return result;
}

std::strong_ordering MonoidElement::operator<=>(
    const MonoidElement& other) const {
  return std::lexicographical_compare_three_way(
      terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end());
}

std::string to_string(const MonoidElement& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [g, n] : x.terms()) {
    if (!s.empty()) s += " + ";
    if (n != 1) s += std::to_string(n) + "*";
    s += to_string(g);
  }
  return s;
}

MonoidElement elem_add(const MonoidElement& x, const MonoidElement& y) {
  return x + y;
}

MonoidElement apply_generator_map(const GeneratorMap& m,
                                  const MonoidElement& x) {
  MonoidElement result;
  for (const auto& [g, n] : x.terms()) {
    auto it = m.find(g);
    if (it == m.end())
      throw InvalidInput("generator " + to_string(g) +
                         " is outside the domain of the map");
    result += n * it->second;
  }
  return result;
}

std::string_view to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::vertex:
      return "vertex";
    case RelationKind::emitter:
      return "emitter";
    case RelationKind::exchange:
      return "exchange";
    case RelationKind::custom:
      return "custom";
  }
  return "custom";
}

Presentation::Presentation(std::vector<Generator> alphabet,
                           std::vector<Relation> relations)
    : alphabet_(std::move(alphabet)), relations_(std::move(relations)) {
  std::sort(alphabet_.begin(), alphabet_.end());
  alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()),
                  alphabet_.end());
  for (std::size_t i = 0; i < alphabet_.size(); ++i) index_[alphabet_[i]] = i;

  for (std::size_t i = 0; i < relations_.size(); ++i) {
    const auto& r = relations_[i];
    if (r.lhs.is_zero() || r.rhs.is_zero())
      throw InvalidInput("relation " + std::to_string(i) + " has a zero side");
    if (!contains(r.lhs) || !contains(r.rhs))
      throw InvalidInput("relation " + std::to_string(i) +
                         " mentions a generator outside the alphabet");
  }
}

std::optional<std::size_t> Presentation::index_of(const Generator& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Presentation::contains(const MonoidElement& x) const {
  return std::all_of(x.terms().begin(), x.terms().end(), [&](const auto& t) {
    return index_.contains(t.first);
  });
}

namespace {

// Non-empty subsets of {0, .., k-1} as sorted index lists, ordered by bitmask.
std::vector<std::vector<std::size_t>> nonempty_subsets(std::size_t k) {
  if (k >= 20) throw InvalidInput("too many materialized edges for subsets");
  std::vector<std::vector<std::size_t>> result;
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) s.push_back(i);
    }
    result.push_back(std::move(s));
  }
  return result;
}

std::vector<std::size_t> difference(const std::vector<std::size_t>& a,
                                    const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

}  // namespace

MonoidElement range_sum(const Graph& g, std::string_view v,
                        const std::vector<std::size_t>& indices) {
  MonoidElement sum;
  auto emitter = g.infinite_emitters.find(std::string(v));
  if (emitter != g.infinite_emitters.end()) {
    for (auto n : indices)
      sum.add(Generator::of_vertex(emitter->second.descriptor.range_at(n)));
    return sum;
  }
  auto edges = out_edges(g, v);
  for (auto n : indices) {
    if (n >= edges.size())
      throw InvalidInput("vertex '" + std::string(v) + "' has no edge " +
                         std::to_string(n));
    sum.add(Generator::of_vertex(edges[n].range));
  }
  return sum;
}

std::vector<Generator> generators(const Graph& g) {
  require_valid(g);
  std::vector<Generator> result;
  for (const auto& v : g.vertices) result.push_back(Generator::of_vertex(v));
  for (const auto& [v, emitter] : g.infinite_emitters) {
    for (auto& s : nonempty_subsets(emitter.materialized))
      result.push_back(Generator::cofinite(v, std::move(s)));
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Relation> relations(const Graph& g) {
  require_valid(g);
  std::vector<Relation> result;
  std::vector<std::string> ordered = g.vertices;
  std::sort(ordered.begin(), ordered.end());

  for (const auto& v : ordered) {
    if (vertex_class(g, v) != VertexClass::regular) continue;
    MonoidElement rhs;
    for (const auto& e : out_edges(g, v))
      rhs.add(Generator::of_vertex(e.range));
    result.push_back(
        {MonoidElement(Generator::of_vertex(v)), rhs, RelationKind::vertex});
  }

  for (const auto& [v, emitter] : g.infinite_emitters) {
    const MonoidElement top(Generator::of_vertex(v));
    const auto subsets = nonempty_subsets(emitter.materialized);
    for (const auto& s : subsets) {
      result.push_back({MonoidElement(Generator::cofinite(v, s)) +
                            range_sum(g, v, s),
                        top, RelationKind::emitter});
    }
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      for (std::size_t j = i + 1; j < subsets.size(); ++j) {
        const auto& s = subsets[i];
        const auto& t = subsets[j];
        result.push_back(
            {MonoidElement(Generator::cofinite(v, s)) +
                 range_sum(g, v, difference(s, t)),
             MonoidElement(Generator::cofinite(v, t)) +
                 range_sum(g, v, difference(t, s)),
             RelationKind::exchange});
      }
    }
  }
  return result;
}

Presentation graph_monoid(const Graph& g) {
  return Presentation(generators(g), relations(g));
}

}  // namespace graphmonoid
