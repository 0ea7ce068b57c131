// Acceptance suite: seven criteria, one PASS/FAIL line each. Every corpus is
// seeded, and each criterion returns a report string whose bytes must not
// depend on anything but those seeds (timings are printed separately).

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "graphmonoid/acyclic_oracle.hpp"
#include "graphmonoid/ck_limits.hpp"
#include "graphmonoid/desingularize.hpp"
#include "graphmonoid/rewriting.hpp"
#include "graphmonoid/sampling.hpp"

using namespace graphmonoid;

namespace {

// Pinned parameters.
constexpr std::uint64_t kSeed = 20240917;
constexpr std::size_t kIsoGraphs = 24;
constexpr std::size_t kIsoMaxVertices = 6;
constexpr std::size_t kIsoMaxMaterialized = 3;
constexpr std::size_t kIsoSamples = 100;
constexpr std::size_t kIsoMaxDegree = 5;
constexpr double kIsoSeconds = 60.0;

constexpr std::size_t kWordSampledGraphs = 60;
constexpr std::size_t kWordMaxDegree = 4;
constexpr std::size_t kBfsDepth = 8;
constexpr std::size_t kBfsStateCap = 4000;
constexpr double kWordSeconds = 120.0;

constexpr std::size_t kDags = 50;
constexpr std::size_t kDagMaxVertices = 7;
constexpr std::size_t kDagMaxEdges = 10;
constexpr std::size_t kDagPairs = 100;
constexpr std::size_t kDagMaxDegree = 5;
constexpr double kDagSeconds = 60.0;

constexpr std::size_t kChainMaxLevels = 5;
constexpr std::size_t kChainDegree = 3;

constexpr std::size_t kMorphisms = 20;

struct Outcome {
  bool pass = true;
  std::string report;
};

// Running digest of everything a criterion computed, so that reports change
// whenever any intermediate answer changes.
class Digest {
 public:
  void add(std::string_view s) {
    for (unsigned char c : s) {
      h_ ^= c;
      h_ *= 1099511628211ull;
    }
    h_ ^= 0xff;
    h_ *= 1099511628211ull;
  }
  void add(const MonoidElement& x) { add(to_string(x)); }
  std::string hex() const {
    std::ostringstream out;
    out << std::hex << h_;
    return out.str();
  }

 private:
  std::uint64_t h_ = 1469598103934665603ull;
};

bool decided_equal(const RewriteSystem& rs, const MonoidElement& u,
                   const MonoidElement& v, Digest& digest) {
  auto nu = normal_form(rs, u);
  auto nv = normal_form(rs, v);
  digest.add(nu);
  digest.add(nv);
  return nu == nv;
}

std::size_t count_emitters(const Graph& g) { return g.infinite_emitters.size(); }

// Graphs with at most six vertices mixing all three vertex classes, plus two
// fixed examples with prefixes and loops.
std::vector<Graph> isomorphism_corpus() {
  std::vector<Graph> out;
  {
    Graph g;
    g.add_vertex("v").add_vertex("u").add_vertex("w");
    g.add_edge("r", "u", "w");
    g.add_infinite_emitter("v", {{"u"}, {"w", "v"}});
    out.push_back(materialize_edges(g, "v", 3));
  }
  out.push_back(testing::emitter_to_sink(3));
  Rng rng(kSeed);
  while (out.size() < kIsoGraphs) {
    Graph g = testing::random_graph(rng, {kIsoMaxVertices, 2, kIsoMaxMaterialized, true});
    const std::size_t emitters = count_emitters(g);
    if (emitters == 0 || emitters > 2 || sinks(g).empty()) continue;
    bool has_regular = false;
    for (const auto& v : g.vertices)
      has_regular = has_regular || vertex_class(g, v) == VertexClass::regular;
    if (!has_regular && out.size() % 2 == 0) continue;
    out.push_back(std::move(g));
  }
  return out;
}

struct IsoSetup {
  Graph e;
  Graph full;  // every emitter materialized to the truncation level
  std::size_t level;
  Desingularization d;
  Desingularization dfull;
};

IsoSetup iso_setup(const Graph& e) {
  std::size_t level = 2;
  for (const auto& gen : generators(e)) level = std::max(level, required_truncation(MonoidElement(gen)));
  Graph full = e;
  for (const auto& [v, em] : e.infinite_emitters) full = materialize_edges(full, v, level);
  return {e, full, level, desingularize(e, level), desingularize(full, level)};
}

std::vector<Generator> non_boundary(const Desingularization& d) {
  std::vector<Generator> out;
  for (const auto& v : d.graph.vertices) {
    if (!d.is_boundary(v)) out.push_back(Generator::of_vertex(v));
  }
  return out;
}

Outcome criterion_isomorphism() {
  Outcome o;
  Digest digest;
  std::size_t checks = 0, failures = 0;
  Rng rng(kSeed + 1);
  for (const auto& e : isomorphism_corpus()) {
    IsoSetup s = iso_setup(e);
    auto re = complete(graph_monoid(s.e));
    auto rf = complete(graph_monoid(s.d.graph));

    std::vector<MonoidElement> xs;
    for (const auto& gen : generators(s.e)) xs.emplace_back(gen);
    for (std::size_t i = 0; i < kIsoSamples; ++i)
      xs.push_back(random_element(generators(s.e), kIsoMaxDegree, rng));
    for (const auto& x : xs) {
      ++checks;
      if (!decided_equal(re, psi(s.d, phi(s.d, x)), x, digest)) ++failures;
    }

    const auto inner = non_boundary(s.d);
    std::vector<MonoidElement> ys;
    for (const auto& gen : inner) ys.emplace_back(gen);
    for (std::size_t i = 0; i < kIsoSamples; ++i)
      ys.push_back(random_element(inner, kIsoMaxDegree, rng));
    for (const auto& y : ys) {
      ++checks;
      if (!decided_equal(rf, phi(s.dfull, psi(s.dfull, y)), y, digest)) ++failures;
    }
  }
  o.pass = failures == 0;
  o.report = "graphs=" + std::to_string(kIsoGraphs) + " checks=" + std::to_string(checks) +
             " failures=" + std::to_string(failures) + " digest=" + digest.hex();
  return o;
}

Outcome criterion_relations() {
  Outcome o;
  Digest digest;
  std::size_t phi_checks = 0, psi_checks = 0, failures = 0;
  for (const auto& e : isomorphism_corpus()) {
    IsoSetup s = iso_setup(e);
    const auto pe = graph_monoid(s.e);
    const auto pf = graph_monoid(s.d.graph);
    auto rf = complete(pf);
    auto rfull = complete(graph_monoid(s.full));
    for (const auto& r : pe.relations()) {
      ++phi_checks;
      if (!decided_equal(rf, phi(s.d, r.lhs), phi(s.d, r.rhs), digest)) ++failures;
    }
    // Boundary vertices are sinks of the truncated graph, so every relation
    // of it belongs to a non-boundary vertex.
    for (const auto& r : pf.relations()) {
      ++psi_checks;
      if (!decided_equal(rfull, psi(s.dfull, r.lhs), psi(s.dfull, r.rhs), digest)) ++failures;
    }
  }
  o.pass = failures == 0;
  o.report = "phi_relations=" + std::to_string(phi_checks) +
             " psi_relations=" + std::to_string(psi_checks) +
             " failures=" + std::to_string(failures) + " digest=" + digest.hex();
  return o;
}

// Every graph on at most two vertices, plus seeded three- and four-vertex
// graphs, each with at most two materialized edges per emitter.
std::vector<Graph> word_corpus() {
  std::vector<Graph> out = testing::small_graphs();
  Rng rng(kSeed + 3);
  std::size_t added = 0;
  while (added < kWordSampledGraphs) {
    Graph g = testing::random_graph(rng, {4, 2, 2, true});
    if (g.vertices.size() < 3) continue;
    if (generators(g).size() > 10) continue;
    out.push_back(std::move(g));
    ++added;
  }
  return out;
}

Outcome criterion_word_engine() {
  Outcome o;
  Digest digest;
  std::size_t graphs = 0, elements = 0, equal_verdicts = 0, unequal_verdicts = 0;
  std::size_t contradictions = 0, undecided = 0;
  for (const auto& g : word_corpus()) {
    ++graphs;
    const auto p = graph_monoid(g);
    auto rs = complete(p);
    CongruenceExplorer explorer(p);
    const auto sample = elements_up_to_degree(p.generators(), kWordMaxDegree);

    std::vector<Word> forms;
    std::map<Word, std::size_t> class_size;  // within the sample
    for (const auto& x : sample) {
      forms.push_back(normal_form_word(rs, to_word(p, x)));
      ++class_size[forms.back()];
    }
    for (std::size_t i = 0; i < sample.size(); ++i) {
      ++elements;
      const Word x = to_word(p, sample[i]);
      WordClosure c = explorer.closure(x, kBfsDepth, kBfsStateCap);
      // Pairs (x, y) with y reached: BFS says equal.
      std::size_t reached_in_sample = 0;
      for (const auto& y : c.words) {
        if (normal_form_word(rs, y) != forms[i]) ++contradictions;
        std::uint64_t degree = 0;
        for (auto n : y) degree += n;
        if (degree <= kWordMaxDegree) ++reached_in_sample;
      }
      equal_verdicts += reached_in_sample;
      if (c.saturated) {
        // Whole class explored: every sampled y outside it is unequal, and
        // the engine must not put any such y in the same class.
        if (reached_in_sample != class_size[forms[i]]) ++contradictions;
        unequal_verdicts += sample.size() - reached_in_sample;
      } else {
        undecided += sample.size() - reached_in_sample;
      }
      digest.add(to_string(from_word(p, forms[i])));
    }
  }
  o.pass = contradictions == 0;
  o.report = "graphs=" + std::to_string(graphs) + " elements=" + std::to_string(elements) +
             " bfs_equal=" + std::to_string(equal_verdicts) +
             " bfs_unequal=" + std::to_string(unequal_verdicts) +
             " bfs_no_verdict=" + std::to_string(undecided) +
             " contradictions=" + std::to_string(contradictions) + " digest=" + digest.hex();
  return o;
}

Outcome criterion_acyclic_oracle() {
  Outcome o;
  Digest digest;
  std::size_t agreements = 0, discrepancies = 0, equal_pairs = 0;
  Rng rng(kSeed + 4);
  for (std::size_t i = 0; i < kDags; ++i) {
    Graph g = testing::random_dag(rng, kDagMaxVertices, kDagMaxEdges);
    auto pairs = sample_pairs(graph_monoid(g), kDagPairs, kDagMaxDegree, rng);
    auto r = cross_check(g, pairs);
    agreements += r.agreements;
    equal_pairs += r.equal_pairs;
    discrepancies += r.discrepancies.size();
    for (const auto& pr : pairs) {
      digest.add(to_string(gamma_acyclic(g, pr.lhs)));
      digest.add(to_string(gamma_acyclic(g, pr.rhs)));
    }
  }
  o.pass = discrepancies == 0 && agreements == kDags * kDagPairs;
  o.report = "dags=" + std::to_string(kDags) + " pairs=" + std::to_string(kDags * kDagPairs) +
             " agreements=" + std::to_string(agreements) +
             " equal_pairs=" + std::to_string(equal_pairs) +
             " discrepancies=" + std::to_string(discrepancies) + " digest=" + digest.hex();
  return o;
}

std::vector<GraphChain> continuity_chains() {
  std::vector<GraphChain> out;
  // Levels materialize 1..5 edges.
  out.push_back(testing::materialization_chain(testing::emitter_to_sink(0), "v", 1, kChainMaxLevels));
  {
    Graph g;
    g.add_vertex("v").add_vertex("u").add_vertex("w");
    g.add_edge("r", "u", "w");
    g.add_infinite_emitter("v", {{"u"}, {"w", "v"}});
    out.push_back(testing::materialization_chain(g, "v", 0, kChainMaxLevels - 1));
  }
  {
    Graph g;
    g.add_vertex("v").add_vertex("a").add_vertex("b");
    g.add_infinite_emitter("v", {{}, {"a", "b"}});
    g.add_edge("s", "a", "b").add_edge("t", "a", "a");
    out.push_back(testing::materialization_chain(g, "v", 1, kChainMaxLevels - 1));
  }
  return out;
}

Outcome criterion_continuity() {
  Outcome o;
  std::ostringstream report;
  std::size_t counterexamples = 0, unreached = 0;
  for (const auto& chain : continuity_chains()) {
    auto r = check_continuity(chain, kChainDegree);
    counterexamples += r.counterexamples.size();
    unreached += r.unreached_generators.size();
    report << "[levels=" << r.levels << " elements=" << r.elements_checked
           << " top_classes=" << r.classes_checked << " pairs=" << r.pairs_checked
           << " top_generators=" << r.generators_checked
           << " level_collapses=" << r.level_collapses << "] ";
  }
  o.pass = counterexamples == 0 && unreached == 0;
  report << "counterexamples=" << counterexamples << " unreached=" << unreached;
  o.report = report.str();
  return o;
}

Outcome criterion_naturality() {
  Outcome o;
  Digest digest;
  std::size_t generators_checked = 0, failures = 0, rejected = 0;
  Rng rng(kSeed + 6);
  for (std::size_t i = 0; i < kMorphisms; ++i) {
    Graph g = testing::random_dag(rng, 6, 8);
    auto m = testing::random_ck_extension(rng, g, 1 + rng.below(3), 1 + rng.below(6));
    if (!is_ck_morphism(m).is_ck || !is_acyclic(m.target)) {
      ++rejected;
      continue;
    }
    generators_checked += g.vertices.size();
    failures += check_naturality(m).size();
    for (const auto& v : g.vertices) digest.add(to_string(path_count(m.target, m.vertex_map.at(v))));
  }
  o.pass = failures == 0 && rejected == 0;
  o.report = "morphisms=" + std::to_string(kMorphisms) +
             " generators=" + std::to_string(generators_checked) +
             " failures=" + std::to_string(failures) + " rejected=" + std::to_string(rejected) +
             " digest=" + digest.hex();
  return o;
}

struct Criterion {
  int number;
  std::string name;
  std::function<Outcome()> run;
  double limit_seconds;  // 0: no limit
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "desingularization isomorphism", criterion_isomorphism, kIsoSeconds},
      {2, "relation preservation", criterion_relations, 0},
      {3, "word-engine completeness", criterion_word_engine, kWordSeconds},
      {4, "acyclic oracle equivalence", criterion_acyclic_oracle, kDagSeconds},
      {5, "continuity", criterion_continuity, 0},
      {6, "naturality", criterion_naturality, 0},
  };
  return all;
}

}  // namespace

int main() {
  bool all_pass = true;
  std::vector<std::string> first_run;
  for (const auto& c : criteria()) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    std::string error;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds == 0 || seconds < c.limit_seconds;
    const bool pass = out.pass && in_time && error.empty();
    all_pass = all_pass && pass;
    first_run.push_back(out.report);

    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.number << " (" << c.name
              << "): " << (error.empty() ? out.report : "exception: " + error);
    std::cout.precision(2);
    std::cout << std::fixed << "  [" << seconds << " s";
    if (c.limit_seconds > 0) std::cout << ", limit " << c.limit_seconds << " s";
    std::cout << "]\n" << std::flush;
  }

  // Criterion 7: a second run with the same seeds reproduces every report.
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < criteria().size(); ++i) {
    std::string again;
    try {
      again = criteria()[i].run().report;
    } catch (const std::exception& e) {
      again = std::string("exception: ") + e.what();
    }
    if (again != first_run[i]) ++mismatches;
  }
  const bool deterministic = mismatches == 0;
  all_pass = all_pass && deterministic;
  std::cout << (deterministic ? "PASS" : "FAIL")
            << "  criterion 7 (determinism): reports_compared=" << criteria().size()
            << " mismatches=" << mismatches << '\n';
  return all_pass ? 0 : 1;
}
