#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "graphmonoid/monoid.hpp"

namespace graphmonoid {

// Seeded generator with platform-independent draws (std distributions are
// implementation-defined, mt19937_64 itself is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n); n must be positive.
  std::size_t below(std::size_t n);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

// Every element of total degree <= degree (including 0), ordered by degree
// and then canonically.
std::vector<MonoidElement> elements_up_to_degree(
    const std::vector<Generator>& alphabet, std::size_t degree);

// Degree drawn uniformly from [1, max_degree], then that many generators.
MonoidElement random_element(const std::vector<Generator>& alphabet,
                             std::size_t max_degree, Rng& rng);

// Applies up to `steps` randomly chosen relation applications (either
// direction) to x, skipping steps where nothing applies.
MonoidElement random_walk(const Presentation& p, const MonoidElement& x,
                          std::size_t steps, Rng& rng);

struct ElementPair {
  MonoidElement lhs;
  MonoidElement rhs;
};

// Alternates independent random pairs with pairs (x, random_walk(x)), which
// are congruent by construction.
std::vector<ElementPair> sample_pairs(const Presentation& p, std::size_t count,
                                      std::size_t max_degree, Rng& rng);

}  // namespace graphmonoid
