#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "graphmonoid/ck_limits.hpp"
#include "graphmonoid/graph.hpp"
#include "graphmonoid/monoid.hpp"
#include "graphmonoid/rewriting.hpp"
#include "graphmonoid/sampling.hpp"

namespace graphmonoid {

// Element of the free commutative monoid on the sinks of a graph. Entries
// are never zero.
using SinkVector = std::map<std::string, std::uint64_t>;

SinkVector add(const SinkVector& a, const SinkVector& b);
SinkVector scale(std::uint64_t n, const SinkVector& a);
std::string to_string(const SinkVector& a);

bool is_acyclic(const Graph& g);

// Memoized path counts for one finite acyclic row-finite graph: entry w of
// count(v) is the number of paths from v to the sink w, the empty path
// included. Construction throws InvalidInput for a graph with a cycle or an
// infinite emitter.
class PathCounter {
 public:
  explicit PathCounter(const Graph& g);

  const SinkVector& count(std::string_view v) const;
  // Additive extension to elements over vertex generators. Throws
  // InvalidInput for cofinite generators and unknown vertices.
  SinkVector gamma(const MonoidElement& x) const;

 private:
  std::map<std::string, SinkVector, std::less<>> counts_;
};

SinkVector path_count(const Graph& g, std::string_view v);
SinkVector gamma_acyclic(const Graph& g, const MonoidElement& x);

struct OracleDiscrepancy {
  MonoidElement lhs;
  MonoidElement rhs;
  bool rewriting_equal = false;
  SinkVector lhs_vector;
  SinkVector rhs_vector;
};

struct CrossCheckReport {
  std::size_t agreements = 0;
  std::size_t equal_pairs = 0;  // pairs both sides call equal
  std::vector<OracleDiscrepancy> discrepancies;
  bool ok() const { return discrepancies.empty(); }
};

// Compares the completed word problem with path-count vectors on each pair.
CrossCheckReport cross_check(const Graph& g,
                             const std::vector<ElementPair>& pairs,
                             CompletionOptions options = {});

// The linear map between sink vectors induced by a CK-morphism of finite
// acyclic graphs: the unit vector at sink s goes to the path counts of its
// image in the target.
SinkVector sink_transfer(const GraphMorphism& m, const SinkVector& x);

struct NaturalityFailure {
  Generator generator;
  SinkVector via_monoid;    // oracle of the induced monoid image
  SinkVector via_transfer;  // transfer of the source oracle
};

// Checks oracle_F(M[eta](a_v)) == transfer(oracle_E(a_v)) for every vertex v
// of the source.
std::vector<NaturalityFailure> check_naturality(const GraphMorphism& m);

}  // namespace graphmonoid
