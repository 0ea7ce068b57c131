#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphmonoid/graph.hpp"

namespace graphmonoid {

// A generator of the graph monoid: a_v when `edges` is empty, otherwise
// a_{v,S} for an infinite emitter v, where S is given by the sorted indices
// n of its edges e_n^v.
//
// Canonical order: vertex generators first, then cofinite generators; each
// group lexicographic (vertex id, then index list).
struct Generator {
  std::string vertex;
  std::vector<std::size_t> edges;

  static Generator of_vertex(std::string v);
  // Sorts and deduplicates `indices`; throws InvalidInput when empty.
  static Generator cofinite(std::string v, std::vector<std::size_t> indices);

  bool is_vertex() const { return edges.empty(); }
  // Largest edge index in S; zero for vertex generators.
  std::size_t max_index() const { return edges.empty() ? 0 : edges.back(); }

  std::strong_ordering operator<=>(const Generator& other) const;
  bool operator==(const Generator&) const = default;
};

std::string to_string(const Generator& g);

// Element of the free commutative monoid on generators: a finitely supported
// map to positive multiplicities. The empty element is the identity 0.
class MonoidElement {
 public:
  using Terms = std::map<Generator, std::uint64_t>;

  MonoidElement() = default;
  explicit MonoidElement(Generator g, std::uint64_t multiplicity = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::uint64_t degree() const;
  std::uint64_t multiplicity(const Generator& g) const;

  // Adds n copies of g; n == 0 is a no-op.
  MonoidElement& add(const Generator& g, std::uint64_t n = 1);
  MonoidElement& operator+=(const MonoidElement& other);

  friend MonoidElement operator+(MonoidElement lhs, const MonoidElement& rhs) {
    return lhs += rhs;
  }
  friend MonoidElement operator*(std::uint64_t n, const MonoidElement& x);

  bool operator==(const MonoidElement&) const = default;
  std::strong_ordering operator<=>(const MonoidElement& other) const;

 private:
  Terms terms_;
};

std::string to_string(const MonoidElement& x);

MonoidElement elem_add(const MonoidElement& x, const MonoidElement& y);

using GeneratorMap = std::map<Generator, MonoidElement>;

// Additive extension of m. Throws InvalidInput for a generator of x outside
// the domain of m.
MonoidElement apply_generator_map(const GeneratorMap& m,
                                  const MonoidElement& x);

enum class RelationKind {
  vertex,    // a_v = sum over out-edges of a_{r(e)}, v regular
  emitter,   // a_{v,S} + sum_{e in S} a_{r(e)} = a_v
  exchange,  // a_{v,S} + sum_{S\T} a_{r(e)} = a_{v,T} + sum_{T\S} a_{r(e)}
  custom,
};

std::string_view to_string(RelationKind kind);

struct Relation {
  MonoidElement lhs;
  MonoidElement rhs;
  RelationKind kind = RelationKind::custom;

  bool operator==(const Relation&) const = default;
};

// Finite alphabet plus defining relations. The alphabet is kept in canonical
// generator order; both sides of every relation are non-zero and supported
// in the alphabet.
class Presentation {
 public:
  Presentation() = default;
  // Throws InvalidInput when a relation violates the invariants.
  Presentation(std::vector<Generator> alphabet, std::vector<Relation> relations);

  const std::vector<Generator>& generators() const { return alphabet_; }
  const std::vector<Relation>& relations() const { return relations_; }

  std::optional<std::size_t> index_of(const Generator& g) const;
  bool contains(const MonoidElement& x) const;

 private:
  std::vector<Generator> alphabet_;
  std::map<Generator, std::size_t> index_;
  std::vector<Relation> relations_;
};

// All a_v together with all a_{v,S} for non-empty sets S of materialized
// edges of each infinite emitter v, in canonical order.
std::vector<Generator> generators(const Graph& g);

// Defining relations of the graph monoid. Exchange relations are listed once
// per unordered pair {S, T}.
std::vector<Relation> relations(const Graph& g);

// The graph monoid of g as a presentation. Throws InvalidInput for an invalid
// graph.
Presentation graph_monoid(const Graph& g);

// Sum of a_{r(e)} over the given edge indices of v (uses the descriptor, so
// indices beyond the materialized ones are allowed for infinite emitters).
MonoidElement range_sum(const Graph& g, std::string_view v,
                        const std::vector<std::size_t>& indices);

}  // namespace graphmonoid
