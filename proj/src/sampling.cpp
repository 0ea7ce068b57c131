#include "graphmonoid/sampling.hpp"

#include <limits>

#include "graphmonoid/error.hpp"
#include "graphmonoid/rewriting.hpp"

namespace graphmonoid {

std::size_t Rng::below(std::size_t n) {
  if (n == 0) throw InvalidInput("Rng::below needs a positive bound");
  const std::uint64_t bound = n;
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

namespace {

void extend(const std::vector<Generator>& alphabet, std::size_t start,
            std::size_t remaining, MonoidElement& current,
            std::vector<MonoidElement>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = start; i < alphabet.size(); ++i) {
    MonoidElement next = current;
    next.add(alphabet[i]);
    extend(alphabet, i, remaining - 1, next, out);
  }
}

}  // namespace

std::vector<MonoidElement> elements_up_to_degree(
    const std::vector<Generator>& alphabet, std::size_t degree) {
  std::vector<MonoidElement> out;
  for (std::size_t d = 0; d <= degree; ++d) {
    MonoidElement zero;
    extend(alphabet, 0, d, zero, out);
  }
  return out;
}

MonoidElement random_element(const std::vector<Generator>& alphabet,
                             std::size_t max_degree, Rng& rng) {
  MonoidElement x;
  if (alphabet.empty() || max_degree == 0) return x;
  const std::size_t degree = 1 + rng.below(max_degree);
  for (std::size_t i = 0; i < degree; ++i)
    x.add(alphabet[rng.below(alphabet.size())]);
  return x;
}

MonoidElement random_walk(const Presentation& p, const MonoidElement& x,
                          std::size_t steps, Rng& rng) {
  CongruenceExplorer explorer(p);
  Word w = to_word(p, x);
  std::vector<Word> options;
  for (std::size_t i = 0; i < steps; ++i) {
    options.clear();
    explorer.neighbours(w, options);
    if (options.empty()) break;
    w = options[rng.below(options.size())];
  }
  return from_word(p, w);
}

std::vector<ElementPair> sample_pairs(const Presentation& p, std::size_t count,
                                      std::size_t max_degree, Rng& rng) {
  std::vector<ElementPair> out;
  const auto& alphabet = p.generators();
  for (std::size_t i = 0; i < count; ++i) {
    MonoidElement lhs = random_element(alphabet, max_degree, rng);
    MonoidElement rhs = i % 2 == 0 ? random_element(alphabet, max_degree, rng)
                                   : random_walk(p, lhs, 1 + rng.below(4), rng);
    out.push_back({std::move(lhs), std::move(rhs)});
  }
  return out;
}

}  // namespace graphmonoid
