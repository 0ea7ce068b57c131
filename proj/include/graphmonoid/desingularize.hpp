#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "graphmonoid/graph.hpp"
#include "graphmonoid/monoid.hpp"

namespace graphmonoid {

// Name of the tail vertex w_n(v).
std::string tail_vertex_name(std::string_view v, std::size_t n);
// Name of the edge f_n^v (redistributed out-edge) and g_n^v (tail edge).
std::string redistributed_edge_name(std::string_view v, std::size_t n);
std::string tail_edge_name(std::string_view v, std::size_t n);

struct TailPosition {
  std::string vertex;  // vertex v of the source graph
  std::size_t n = 0;   // position on the tail, 0 for w_0(v)

  bool operator==(const TailPosition&) const = default;
};

// The desingularization F of a graph E cut off after `level` tail steps.
//
// Every vertex v of E becomes w_0(v); a singular v (sink or infinite emitter)
// grows a tail w_0(v) -> w_1(v) -> ... -> w_N(v) along edges g_n^v. The edge
// e_n^v becomes f_n^v, leaving w_0(v) for finite emitters and w_n(v) for
// infinite emitters (n < N), and ending at w_0(r(e_n^v)). The last tail
// vertices w_N(v) are boundary vertices: they have no out-edges and so carry
// no relations, which keeps every relation of the untruncated F that only
// mentions indices below N valid in the truncated graph.
struct Desingularization {
  Graph source;
  std::size_t level = 0;
  Graph graph;
  std::set<std::string> boundary;
  std::map<std::string, TailPosition> positions;  // F vertex -> (v, n)

  std::optional<TailPosition> locate(std::string_view f_vertex) const;
  bool is_boundary(std::string_view f_vertex) const;
};

// Throws InvalidInput for an invalid graph or level == 0.
Desingularization desingularize(const Graph& g, std::size_t level);

// The isomorphism from the graph monoid of E to that of F:
//   a_v     -> b_{w_0(v)}
//   a_{v,S} -> b_{w_{n+1}(v)} + sum over k <= n, e_k^v not in S, of
//              b_{w_0(r(e_k^v))},   n = max index in S.
// Throws TruncationError when some n + 1 exceeds the level.
MonoidElement phi(const Desingularization& d, const MonoidElement& x);
GeneratorMap phi_map(const Desingularization& d);

// Its inverse:
//   b_{w_0(v)} -> a_v
//   b_{w_n(v)} -> a_{v,{e_0,..,e_{n-1}}} (infinite emitter), a_v (sink).
// Throws InvalidInput when e_0^v .. e_{n-1}^v are not all materialized in E.
MonoidElement psi(const Desingularization& d, const MonoidElement& y);
GeneratorMap psi_map(const Desingularization& d);

// Largest cofinite edge index in x plus 2, and at least 2.
std::size_t required_truncation(const MonoidElement& x);

}  // namespace graphmonoid
