#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "graphmonoid/monoid.hpp"

namespace graphmonoid {

// Exponent vector of an element over a presentation's alphabet.
using Word = std::vector<std::uint32_t>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

using WordSet = std::unordered_set<Word, WordHash>;

// Throws InvalidInput when x mentions a generator outside the alphabet.
Word to_word(const Presentation& p, const MonoidElement& x);
MonoidElement from_word(const Presentation& p, const Word& w);

// Total degree first, then lexicographic with the earliest generator of the
// canonical order most significant.
std::strong_ordering compare_graded_lex(const Word& a, const Word& b);

namespace detail {
struct Derivation;
}

// One application of a defining relation: replaces context + lhs by
// context + rhs (forward) or context + rhs by context + lhs (backward).
struct RewriteStep {
  std::size_t relation = 0;
  bool forward = true;
  MonoidElement context;

  bool operator==(const RewriteStep&) const = default;
};

struct CompletionOptions {
  // Maximum number of critical-pair reductions before giving up.
  std::size_t budget = 100000;
};

// Oriented rules over a presentation's alphabet. A completed system is
// confluent and terminating and generates the congruence of the
// presentation; its rules are sorted by left-hand side in graded-lex order
// and reduced, so it depends only on the presentation.
class RewriteSystem {
 public:
  struct Rule {
    Word lhs;
    Word rhs;
    std::shared_ptr<const detail::Derivation> proof;  // lhs =>* rhs
  };

  const Presentation& presentation() const { return presentation_; }
  std::string_view term_order() const { return "graded-lex"; }
  bool completed() const { return completed_; }
  const std::vector<Rule>& rule_words() const { return rules_; }
  std::vector<std::pair<MonoidElement, MonoidElement>> rules() const;
  std::size_t pair_reductions() const { return pair_reductions_; }

  // Rewrites x to an irreducible word, always applying the lowest-index
  // applicable rule. Does not require completion.
  Word reduce(Word x) const;

 private:
  friend RewriteSystem complete(const Presentation&, CompletionOptions);
  friend RewriteSystem orient(const Presentation&);
  friend class Completion;

  Presentation presentation_;
  std::vector<Rule> rules_;
  bool completed_ = false;
  std::size_t pair_reductions_ = 0;
};

// The defining relations, oriented but not completed.
RewriteSystem orient(const Presentation& p);

// Throws BudgetExhausted when the budget runs out.
RewriteSystem complete(const Presentation& p, CompletionOptions options = {});

// Throws InvalidInput for an uncompleted system or a foreign generator.
MonoidElement normal_form(const RewriteSystem& rs, const MonoidElement& x);
Word normal_form_word(const RewriteSystem& rs, const Word& x);

struct EqualityCertificate {
  enum class Kind {
    chain,               // replayable relation applications from lhs to rhs
    common_normal_form,  // equal, chain too long to expand
    separating,          // distinct normal forms
  };

  Kind kind = Kind::separating;
  MonoidElement lhs_normal_form;
  MonoidElement rhs_normal_form;
  std::vector<RewriteStep> chain;
};

std::string_view to_string(EqualityCertificate::Kind kind);

struct EqualityResult {
  bool equal = false;
  EqualityCertificate certificate;
};

// Chains longer than max_chain steps are summarized by the common normal
// form.
EqualityResult equal(const RewriteSystem& rs, const MonoidElement& u,
                     const MonoidElement& v, std::size_t max_chain = 4096);

EqualityResult equal(const Presentation& p, const MonoidElement& u,
                     const MonoidElement& v, CompletionOptions options = {});

// Applies each step in turn starting from `from`; true when every step
// matches and the walk ends at `to`.
bool replay_chain(const Presentation& p, const MonoidElement& from,
                  const std::vector<RewriteStep>& chain,
                  const MonoidElement& to);

// Checks a certificate against the completed system: chains are replayed,
// normal forms recomputed.
bool verify_certificate(const RewriteSystem& rs, const MonoidElement& u,
                        const MonoidElement& v, const EqualityResult& result);

// Everything reachable from x by at most `depth` applications of defining
// relations in either direction.
std::set<MonoidElement> congruence_bfs(const Presentation& p,
                                       const MonoidElement& x,
                                       std::size_t depth);

struct WordClosure {
  WordSet words;
  // The whole congruence class was exhausted within the depth bound.
  bool saturated = false;
  // Exploration stopped at the state cap.
  bool truncated = false;
};

// Relation applications over exponent vectors, for repeated exploration of
// one presentation.
class CongruenceExplorer {
 public:
  explicit CongruenceExplorer(const Presentation& p);

  // Appends every single-step neighbour of x to `out`.
  void neighbours(const Word& x, std::vector<Word>& out) const;

  WordClosure closure(const Word& x, std::size_t depth,
                      std::size_t max_states = SIZE_MAX) const;

 private:
  std::vector<std::pair<Word, Word>> relations_;
};

}  // namespace graphmonoid
