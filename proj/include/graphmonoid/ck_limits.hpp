#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphmonoid/graph.hpp"
#include "graphmonoid/monoid.hpp"
#include "graphmonoid/rewriting.hpp"

namespace graphmonoid {

// A graph morphism given on materialized data. The edge map doubles as the
// index map for infinite emitters: e_n^v goes to whichever materialized edge
// of the image emitter it names.
struct GraphMorphism {
  Graph source;
  Graph target;
  std::map<std::string, std::string> vertex_map;
  std::map<std::string, std::string> edge_map;
};

GraphMorphism identity_morphism(const Graph& g);

// second after first. Throws InvalidInput when the middle graphs differ.
GraphMorphism compose(const GraphMorphism& first, const GraphMorphism& second);

// Reasons m is not a graph morphism at all: partial maps, images outside the
// target, incompatible sources or ranges. Empty for a graph morphism.
std::vector<std::string> structural_violations(const GraphMorphism& m);

struct CkDecision {
  bool is_ck = false;
  std::vector<std::string> violations;
};

// Injective on vertices and edges, bijective on the out-edges of regular
// vertices, infinite emitters sent to infinite emitters. Throws InvalidInput
// when m is not a graph morphism.
CkDecision is_ck_morphism(const GraphMorphism& m);

// a_v -> b_{eta(v)}, a_{v,S} -> b_{eta(v), eta(S)}. Throws InvalidInput for a
// morphism that is not CK.
GeneratorMap induced_monoid_morphism(const GraphMorphism& m);

// A finite chain E_0 -> E_1 -> ... of graphs; links[i] goes from graphs[i] to
// graphs[i + 1].
struct GraphChain {
  std::vector<Graph> graphs;
  std::vector<GraphMorphism> links;
};

// Throws InvalidInput unless the links connect consecutive graphs.
void require_chain(const GraphChain& chain);

// Composite of links from level i to level j (identity when i == j).
GraphMorphism chain_map(const GraphChain& chain, std::size_t i, std::size_t j);

struct GraphColimit {
  Graph top;
  std::vector<GraphMorphism> injections;  // level i -> top
};

// Throws InvalidInput for a malformed chain or a link that is not CK.
GraphColimit colimit_graph(const GraphChain& chain);

// A chain of finitely presented monoids with generator maps between
// consecutive levels.
struct PresentationChain {
  std::vector<Presentation> levels;
  std::vector<GeneratorMap> links;
};

// Applies the graph monoid functor to a CK chain.
PresentationChain monoid_chain(const GraphChain& chain);

// Element of the direct limit, represented at some level.
struct LimitElement {
  std::size_t level = 0;
  MonoidElement representative;

  bool operator==(const LimitElement&) const = default;
};

// The direct limit of a chain of presentations. Two limit elements (i, s) and
// (j, t) are equivalent when their images agree at some level k >= i, j;
// equality at each level is decided by a completed rewrite system.
class MonoidColimit {
 public:
  // Completes every level and checks that each link is a monoid morphism
  // (defined on the whole alphabet, landing in the next alphabet, sending
  // relations to equal pairs). Throws InvalidInput for incoherent links.
  explicit MonoidColimit(PresentationChain chain, CompletionOptions options = {});

  std::size_t size() const { return chain_.levels.size(); }
  const Presentation& level(std::size_t i) const { return chain_.levels.at(i); }
  const RewriteSystem& system(std::size_t i) const { return systems_.at(i); }

  // Connecting map mu_{ij}.
  MonoidElement push(std::size_t i, std::size_t j, const MonoidElement& s) const;

  // mu_{i,inf}(s) = (i, s).
  LimitElement inject(std::size_t i, MonoidElement s) const;

  // First level at which a and b agree, or nullopt when they never do.
  std::optional<std::size_t> equivalence_level(const LimitElement& a,
                                               const LimitElement& b) const;
  bool equivalent(const LimitElement& a, const LimitElement& b) const;

  LimitElement add(const LimitElement& a, const LimitElement& b) const;

 private:
  PresentationChain chain_;
  std::vector<RewriteSystem> systems_;
};

// The morphism out of the limit induced by a compatible family
// psi_i : level i -> target.
class UniversalMap {
 public:
  MonoidElement operator()(const LimitElement& x) const;
  const std::vector<GeneratorMap>& family() const { return family_; }

 private:
  friend UniversalMap universal_map(const MonoidColimit&,
                                    std::vector<GeneratorMap>,
                                    const Presentation&, CompletionOptions);
  std::vector<GeneratorMap> family_;
};

// Checks psi_i = psi_j o mu_{ij} on every generator (equality decided in the
// target). Throws InvalidInput naming the first witnessing generator.
UniversalMap universal_map(const MonoidColimit& colimit,
                           std::vector<GeneratorMap> family,
                           const Presentation& target,
                           CompletionOptions options = {});

// Two limit elements on which the limit and the top graph's monoid disagree.
struct ContinuityCounterexample {
  LimitElement lhs;
  LimitElement rhs;
  bool equivalent_in_limit = false;
  bool equal_at_top = false;
};

struct ContinuityReport {
  std::size_t levels = 0;
  std::size_t degree = 0;
  std::size_t elements_checked = 0;
  std::size_t classes_checked = 0;  // distinct top classes among the sample
  std::size_t pairs_checked = 0;
  std::size_t generators_checked = 0;
  // Sampled elements that are distinct at their own level but meet at the
  // top, summed over levels. Not a failure: a level only carries the edge
  // sets it has materialized, so later levels can add identifications.
  std::size_t level_collapses = 0;
  std::vector<ContinuityCounterexample> counterexamples;
  std::vector<Generator> unreached_generators;  // top generators never hit

  bool ok() const {
    return counterexamples.empty() && unreached_generators.empty();
  }
};

// Samples every element of degree <= `degree` at each level, together with
// the images of lower samples, as limit elements (i, s). Checks that
// equivalence in the limit coincides with equality of the images under the
// induced maps into the top graph's monoid: pushing along the chain and
// mapping directly must land in the same top class, every sampled element
// must be equivalent to a representative of its top class, and
// representatives of distinct top classes must not be equivalent. Also
// checks that every top generator is the image of a generator of some level.
ContinuityReport check_continuity(const GraphChain& chain, std::size_t degree,
                                  CompletionOptions options = {});

}  // namespace graphmonoid
