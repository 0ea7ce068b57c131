#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "graphmonoid/json_io.hpp"

// JSON-in, JSON-out operations shared by the command-line tool and the Python
// module. Each takes parsed documents in the formats of json_io.hpp.
namespace graphmonoid::api {

using io::json;

struct Options {
  std::size_t budget = CompletionOptions{}.budget;
  std::uint64_t seed = 0;
};

json validate(const json& graph);
json present(const json& graph);
json normal_form(const json& graph, const json& element, const Options& opts);
json equal(const json& graph, const json& lhs, const json& rhs,
           const Options& opts);
json desingularize(const json& graph, std::size_t level);
// Without a level, the smallest one that fits the element.
json phi(const json& graph, const json& element, std::optional<std::size_t> level);
// The element lives in the desingularized graph at `level`.
json psi(const json& graph, const json& element, std::size_t level);
json ck_check(const json& source, const json& target, const json& morphism);
json induced_map(const json& source, const json& target, const json& morphism);
json colimit(const json& system);
json continuity_check(const json& system, std::size_t degree,
                      const Options& opts);
json oracle_check(const json& graph, std::size_t samples,
                  std::size_t max_degree, const Options& opts);

}  // namespace graphmonoid::api
