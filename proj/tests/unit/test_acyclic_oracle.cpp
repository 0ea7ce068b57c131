#include <doctest.h>

#include "corpus.hpp"
#include "graphmonoid/acyclic_oracle.hpp"
#include "graphmonoid/error.hpp"

using namespace graphmonoid;

namespace {

MonoidElement a(const std::string& v, std::uint64_t n = 1) {
  return MonoidElement(Generator::of_vertex(v), n);
}

// Depth-first enumeration of every path, as an independent count.
std::uint64_t enumerate_paths(const Graph& g, const std::string& from,
                              const std::string& to) {
  if (from == to && out_edges(g, from).empty()) return 1;
  std::uint64_t total = 0;
  for (const auto& e : out_edges(g, from)) total += enumerate_paths(g, e.range, to);
  return total;
}

}  // namespace

TEST_CASE("path counts on small graphs") {
  Graph sink;
  sink.add_vertex("v");
  CHECK(path_count(sink, "v") == SinkVector{{"v", 1}});

  Graph edge;
  edge.add_vertex("v").add_vertex("w");
  edge.add_edge("e", "v", "w");
  CHECK(path_count(edge, "v") == SinkVector{{"w", 1}});

  CHECK(path_count(testing::diamond(), "v") == SinkVector{{"u", 2}});
  CHECK(gamma_acyclic(testing::diamond(), a("v", 2)) == SinkVector{{"u", 4}});
  CHECK(gamma_acyclic(testing::diamond(), {}).empty());
  CHECK(gamma_acyclic(testing::diamond(), a("u")) == SinkVector{{"u", 1}});
}

TEST_CASE("path counts match explicit enumeration and the vertex recursion") {
  Rng rng(99);
  for (int i = 0; i < 50; ++i) {
    Graph g = testing::random_dag(rng, 7, 10);
    PathCounter pc(g);
    for (const auto& v : g.vertices) {
      for (const auto& s : sinks(g)) {
        auto it = pc.count(v).find(s);
        const std::uint64_t got = it == pc.count(v).end() ? 0 : it->second;
        CHECK(got == enumerate_paths(g, v, s));
      }
      if (vertex_class(g, v) == VertexClass::regular) {
        SinkVector sum;
        for (const auto& e : out_edges(g, v)) sum = add(sum, pc.count(e.range));
        CHECK(sum == pc.count(v));
      }
    }
  }
}

TEST_CASE("gamma is a monoid morphism") {
  Rng rng(4);
  Graph g = testing::diamond();
  auto gens = generators(g);
  CHECK(gamma_acyclic(g, {}).empty());
  for (int i = 0; i < 100; ++i) {
    auto x = random_element(gens, 4, rng);
    auto y = random_element(gens, 4, rng);
    CHECK(gamma_acyclic(g, x + y) == add(gamma_acyclic(g, x), gamma_acyclic(g, y)));
  }
}

TEST_CASE("cycles, emitters and cofinite generators are refused") {
  CHECK_THROWS_AS(path_count(testing::rose(), "v"), InvalidInput);
  CHECK_THROWS_AS(path_count(testing::emitter_to_sink(1), "w"), InvalidInput);
  CHECK_FALSE(is_acyclic(testing::rose()));
  CHECK(is_acyclic(testing::diamond()));
  CHECK_THROWS_AS(gamma_acyclic(testing::diamond(), MonoidElement(Generator::cofinite("v", {0}))),
                  InvalidInput);
  CHECK_THROWS_AS(path_count(testing::diamond(), "nope"), InvalidInput);
}

TEST_CASE("cross check on the diamond") {
  Graph g = testing::diamond();
  std::vector<ElementPair> pairs{{a("v"), a("u", 2)}, {a("w1"), a("w2")}, {a("v"), a("u")}};
  auto r = cross_check(g, pairs);
  CHECK(r.ok());
  CHECK(r.agreements == 3);
  CHECK(r.equal_pairs == 2);
}

TEST_CASE("cross check on random DAGs") {
  Rng rng(2024);
  for (int i = 0; i < 20; ++i) {
    Graph g = testing::random_dag(rng, 7, 10);
    auto pairs = sample_pairs(graph_monoid(g), 40, 4, rng);
    auto r = cross_check(g, pairs);
    CHECK(r.ok());
    CHECK(r.agreements == pairs.size());
  }
}

TEST_CASE("naturality of the oracle under CK extensions") {
  Rng rng(6);
  for (int i = 0; i < 20; ++i) {
    Graph g = testing::random_dag(rng, 6, 8);
    auto m = testing::random_ck_extension(rng, g, 3, 6);
    REQUIRE(is_ck_morphism(m).is_ck);
    REQUIRE(is_acyclic(m.target));
    CHECK(check_naturality(m).empty());
    for (const auto& v : g.vertices) {
      CHECK(sink_transfer(m, path_count(g, v)) == path_count(m.target, m.vertex_map.at(v)));
    }
  }
}
