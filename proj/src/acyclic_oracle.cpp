#include "graphmonoid/acyclic_oracle.hpp"

#include "graphmonoid/error.hpp"

namespace graphmonoid {

SinkVector add(const SinkVector& a, const SinkVector& b) {
  SinkVector out = a;
  for (const auto& [s, n] : b) out[s] += n;
  return out;
}

SinkVector scale(std::uint64_t n, const SinkVector& a) {
  if (n == 0) return {};
  SinkVector out = a;
  for (auto& [s, k] : out) k *= n;
  return out;
}

std::string to_string(const SinkVector& a) {
  std::string out = "{";
  for (const auto& [s, n] : a) {
    if (out.size() > 1) out += ", ";
    out += s + ": " + std::to_string(n);
  }
  return out + "}";
}

namespace {

enum class Mark { unseen, active, done };

// Depth-first topological order (sinks first) without recursion, so long
// chains do not blow the stack. Returns false on a cycle.
bool post_order(const Graph& g, std::vector<std::string>& order) {
  std::map<std::string, std::vector<std::string>> succ;
  for (const auto& v : g.vertices) succ[v];
  for (const auto& e : g.edges) succ[e.source].push_back(e.range);

  std::map<std::string, Mark> mark;
  for (const auto& root : g.vertices) {
    if (mark[root] != Mark::unseen) continue;
    std::vector<std::pair<std::string, std::size_t>> stack{{root, 0}};
    mark[root] = Mark::active;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& children = succ[v];
      if (next < children.size()) {
        const std::string w = children[next++];
        if (mark[w] == Mark::active) return false;
        if (mark[w] == Mark::unseen) {
          mark[w] = Mark::active;
          stack.emplace_back(w, 0);
        }
        continue;
      }
      mark[v] = Mark::done;
      order.push_back(v);
      stack.pop_back();
    }
  }
  return true;
}

}  // namespace

bool is_acyclic(const Graph& g) {
  std::vector<std::string> order;
  return post_order(g, order);
}

PathCounter::PathCounter(const Graph& g) {
  require_valid(g);
  if (!is_row_finite(g))
    throw InvalidInput("path counting needs a graph without infinite emitters");
  std::vector<std::string> order;
  if (!post_order(g, order)) throw InvalidInput("graph has a directed cycle");

  std::map<std::string, std::vector<std::string>> succ;
  for (const auto& e : g.edges) succ[e.source].push_back(e.range);
  for (const auto& v : order) {
    auto it = succ.find(v);
    SinkVector c;
    if (it == succ.end()) {
      c[v] = 1;
    } else {
      for (const auto& w : it->second) c = add(c, counts_.at(w));
    }
    counts_.emplace(v, std::move(c));
  }
}

const SinkVector& PathCounter::count(std::string_view v) const {
  auto it = counts_.find(v);
  if (it == counts_.end())
    throw InvalidInput("unknown vertex '" + std::string(v) + "'");
  return it->second;
}

SinkVector PathCounter::gamma(const MonoidElement& x) const {
  SinkVector out;
  for (const auto& [g, n] : x.terms()) {
    if (!g.is_vertex())
      throw InvalidInput(to_string(g) + " is not a vertex generator");
    out = add(out, scale(n, count(g.vertex)));
  }
  return out;
}

SinkVector path_count(const Graph& g, std::string_view v) {
  return PathCounter(g).count(v);
}

SinkVector gamma_acyclic(const Graph& g, const MonoidElement& x) {
  return PathCounter(g).gamma(x);
}

CrossCheckReport cross_check(const Graph& g,
                             const std::vector<ElementPair>& pairs,
                             CompletionOptions options) {
  PathCounter counter(g);
  RewriteSystem rs = complete(graph_monoid(g), options);
  CrossCheckReport report;
  for (const auto& [lhs, rhs] : pairs) {
    const bool by_rewriting = normal_form(rs, lhs) == normal_form(rs, rhs);
    SinkVector a = counter.gamma(lhs);
    SinkVector b = counter.gamma(rhs);
    if (by_rewriting == (a == b)) {
      ++report.agreements;
      if (by_rewriting) ++report.equal_pairs;
    } else {
      report.discrepancies.push_back({lhs, rhs, by_rewriting, a, b});
    }
  }
  return report;
}

SinkVector sink_transfer(const GraphMorphism& m, const SinkVector& x) {
  PathCounter target(m.target);
  SinkVector out;
  for (const auto& [s, n] : x) {
    auto it = m.vertex_map.find(s);
    if (it == m.vertex_map.end())
      throw InvalidInput("vertex '" + s + "' is not mapped");
    out = add(out, scale(n, target.count(it->second)));
  }
  return out;
}

std::vector<NaturalityFailure> check_naturality(const GraphMorphism& m) {
  GeneratorMap induced = induced_monoid_morphism(m);
  PathCounter source(m.source);
  PathCounter target(m.target);
  std::vector<NaturalityFailure> failures;
  for (const auto& [gen, image] : induced) {
    SinkVector via_monoid = target.gamma(image);
    SinkVector via_transfer;
    for (const auto& [s, n] : source.count(gen.vertex))
      via_transfer = add(via_transfer,
                         scale(n, target.count(m.vertex_map.at(s))));
    if (via_monoid != via_transfer)
      failures.push_back({gen, std::move(via_monoid), std::move(via_transfer)});
  }
  return failures;
}

}  // namespace graphmonoid
