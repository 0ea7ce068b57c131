#include "graphmonoid/rewriting.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "graphmonoid/error.hpp"

namespace graphmonoid {

namespace detail {

constexpr std::size_t kComposite = std::numeric_limits<std::size_t>::max();

struct Segment {
  std::shared_ptr<const Derivation> proof;
  Word context;  // empty means zero
  bool reversed = false;
};

// A proof that one word rewrites to another by relation applications: either
// a single relation (leaf) or a concatenation of shifted sub-proofs.
struct Derivation {
  std::size_t relation = kComposite;
  bool forward = true;
  std::vector<Segment> segments;
  std::uint64_t length = 0;
};

}  // namespace detail

namespace {

using detail::Derivation;
using detail::Segment;
using DerivationPtr = std::shared_ptr<const Derivation>;

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b
             ? std::numeric_limits<std::uint64_t>::max()
             : a + b;
}

DerivationPtr leaf(std::size_t relation, bool forward) {
  auto d = std::make_shared<Derivation>();
  d->relation = relation;
  d->forward = forward;
  d->length = 1;
  return d;
}

bool is_zero(const Word& w) {
  return std::all_of(w.begin(), w.end(), [](auto e) { return e == 0; });
}

DerivationPtr concat(std::vector<Segment> segments) {
  std::erase_if(segments, [](const Segment& s) { return s.proof->length == 0; });
  if (segments.size() == 1 && !segments[0].reversed &&
      is_zero(segments[0].context))
    return segments[0].proof;
  auto d = std::make_shared<Derivation>();
  for (const auto& s : segments) d->length = saturating_add(d->length, s.proof->length);
  d->segments = std::move(segments);
  return d;
}

bool divides(const Word& a, const Word& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool coprime(const Word& a, const Word& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

Word lcm(const Word& a, const Word& b) {
  Word out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

// a - b + c, assuming b divides a.
Word replace(const Word& a, const Word& b, const Word& c) {
  Word out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i] + c[i];
  return out;
}

Word minus(const Word& a, const Word& b) {
  Word out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

void accumulate(Word& acc, const Word& w) {
  if (w.empty()) return;
  if (acc.empty()) {
    acc = w;
    return;
  }
  for (std::size_t i = 0; i < w.size(); ++i) acc[i] += w[i];
}

struct RawStep {
  std::size_t relation;
  bool forward;
  Word context;
};

// Expands a derivation into individual relation applications.
void flatten(const DerivationPtr& root, std::vector<RawStep>& out) {
  struct Frame {
    const Derivation* d;
    Word context;
    bool reversed;
    std::size_t next;
  };
  std::vector<Frame> stack{{root.get(), {}, false, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.d->relation != detail::kComposite) {
      out.push_back({f.d->relation, f.d->forward != f.reversed, f.context});
      stack.pop_back();
      continue;
    }
    const auto& segs = f.d->segments;
    if (f.next == segs.size()) {
      stack.pop_back();
      continue;
    }
    const Segment& s = f.reversed ? segs[segs.size() - 1 - f.next] : segs[f.next];
    ++f.next;
    Word context = f.context;
    accumulate(context, s.context);
    bool reversed = f.reversed != s.reversed;
    stack.push_back({s.proof.get(), std::move(context), reversed, 0});
  }
}

}  // namespace

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto e : w) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Word to_word(const Presentation& p, const MonoidElement& x) {
  Word w(p.generators().size(), 0);
  for (const auto& [g, n] : x.terms()) {
    auto i = p.index_of(g);
    if (!i)
      throw InvalidInput("generator " + to_string(g) +
                         " is not in the presentation's alphabet");
    if (n > std::numeric_limits<std::uint32_t>::max())
      throw InvalidInput("multiplicity too large");
    w[*i] = static_cast<std::uint32_t>(n);
  }
  return w;
}

MonoidElement from_word(const Presentation& p, const Word& w) {
  MonoidElement x;
  for (std::size_t i = 0; i < w.size(); ++i) x.add(p.generators()[i], w[i]);
  return x;
}

std::strong_ordering compare_graded_lex(const Word& a, const Word& b) {
  std::uint64_t da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da <=> db;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

std::vector<std::pair<MonoidElement, MonoidElement>> RewriteSystem::rules()
    const {
  std::vector<std::pair<MonoidElement, MonoidElement>> out;
  for (const auto& r : rules_)
    out.emplace_back(from_word(presentation_, r.lhs),
                     from_word(presentation_, r.rhs));
  return out;
}

Word RewriteSystem::reduce(Word x) const {
  for (;;) {
    auto it = std::find_if(rules_.begin(), rules_.end(),
                           [&](const Rule& r) { return divides(r.lhs, x); });
    if (it == rules_.end()) return x;
    x = replace(x, it->lhs, it->rhs);
  }
}

// Knuth-Bendix completion specialised to commutative monoids: rules are
// oriented by graded-lex, critical pairs come from lcm overlaps of left-hand
// sides (coprime pairs always join), and the rule set is kept inter-reduced.
class Completion {
 public:
  Completion(const Presentation& p, std::size_t budget)
      : budget_(budget) {
    system_.presentation_ = p;
  }

  RewriteSystem run() {
    const auto& rels = system_.presentation_.relations();
    for (std::size_t i = 0; i < rels.size(); ++i) {
      push(to_word(system_.presentation_, rels[i].lhs),
           to_word(system_.presentation_, rels[i].rhs), leaf(i, true));
    }
    do {
      drain();
    } while (!verify_joinable());

    std::vector<RewriteSystem::Rule> final_rules;
    for (auto& r : rules_) {
      if (r.alive) final_rules.push_back({r.lhs, r.rhs, r.proof});
    }
    std::sort(final_rules.begin(), final_rules.end(),
              [](const auto& a, const auto& b) {
                return compare_graded_lex(a.lhs, b.lhs) < 0;
              });
    system_.rules_ = std::move(final_rules);
    system_.completed_ = true;
    system_.pair_reductions_ = reductions_;
    return std::move(system_);
  }

 private:
  struct WorkingRule {
    Word lhs;
    Word rhs;
    DerivationPtr proof;
    bool alive = true;
  };

  struct Pending {
    Word key;
    std::size_t seq;
    Word a;
    Word b;
    DerivationPtr proof;  // a =>* b
  };

  struct LaterFirst {
    bool operator()(const Pending& x, const Pending& y) const {
      auto c = compare_graded_lex(x.key, y.key);
      if (c != 0) return c > 0;
      return x.seq > y.seq;
    }
  };

  void push(Word a, Word b, DerivationPtr proof) {
    Word key = compare_graded_lex(a, b) > 0 ? a : b;
    pending_.push({std::move(key), seq_++, std::move(a), std::move(b),
                   std::move(proof)});
  }

  Word reduce(Word x, std::vector<Segment>& trace) const {
    for (;;) {
      auto it = std::find_if(rules_.begin(), rules_.end(), [&](const auto& r) {
        return r.alive && divides(r.lhs, x);
      });
      if (it == rules_.end()) return x;
      Word context = minus(x, it->lhs);
      x = replace(x, it->lhs, it->rhs);
      trace.push_back({it->proof, std::move(context), false});
    }
  }

  std::size_t alive_count() const {
    return static_cast<std::size_t>(std::count_if(
        rules_.begin(), rules_.end(), [](const auto& r) { return r.alive; }));
  }

  void drain() {
    while (!pending_.empty()) {
      if (reductions_ >= budget_) throw BudgetExhausted(budget_, alive_count());
      ++reductions_;
      Pending eq = pending_.top();
      pending_.pop();

      std::vector<Segment> ta, tb;
      Word a = reduce(eq.a, ta);
      Word b = reduce(eq.b, tb);
      if (a == b) continue;

      // a' <= a => b => b'
      DerivationPtr proof = concat({{concat(std::move(ta)), {}, true},
                                    {eq.proof, {}, false},
                                    {concat(std::move(tb)), {}, false}});
      if (compare_graded_lex(a, b) > 0) {
        add_rule(std::move(a), std::move(b), std::move(proof));
      } else {
        add_rule(std::move(b), std::move(a), concat({{proof, {}, true}}));
      }
    }
  }

  void add_rule(Word lhs, Word rhs, DerivationPtr proof) {
    const std::size_t fresh = rules_.size();
    rules_.push_back({std::move(lhs), std::move(rhs), std::move(proof), true});

    for (std::size_t i = 0; i < fresh; ++i) {
      auto& r = rules_[i];
      if (!r.alive) continue;
      if (divides(rules_[fresh].lhs, r.lhs)) {
        r.alive = false;
        push(r.lhs, r.rhs, r.proof);
      }
    }
    for (std::size_t i = 0; i < fresh; ++i) {
      if (!rules_[i].alive || !divides(rules_[fresh].lhs, rules_[i].rhs))
        continue;
      std::vector<Segment> trace;
      Word reduced = reduce(rules_[i].rhs, trace);
      rules_[i].proof = concat({{rules_[i].proof, {}, false},
                                {concat(std::move(trace)), {}, false}});
      rules_[i].rhs = std::move(reduced);
    }
    for (std::size_t i = 0; i < fresh; ++i) {
      if (rules_[i].alive) push_critical_pair(fresh, i);
    }
  }

  // Returns false when some overlap pair was not joinable.
  bool push_critical_pair(std::size_t i, std::size_t j) {
    const auto& x = rules_[i];
    const auto& y = rules_[j];
    if (coprime(x.lhs, y.lhs)) return true;
    Word l = lcm(x.lhs, y.lhs);
    Word cx = minus(l, x.lhs);
    Word cy = minus(l, y.lhs);
    Word a = replace(l, x.lhs, x.rhs);
    Word b = replace(l, y.lhs, y.rhs);
    push(std::move(a), std::move(b),
         concat({{x.proof, std::move(cx), true}, {y.proof, std::move(cy), false}}));
    return false;
  }

  // Final confluence check over every overlap of surviving rules. Pushes the
  // pairs that do not join and reports whether the system is confluent.
  bool verify_joinable() {
    bool confluent = true;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      if (!rules_[i].alive) continue;
      for (std::size_t j = i + 1; j < rules_.size(); ++j) {
        if (!rules_[j].alive || coprime(rules_[i].lhs, rules_[j].lhs)) continue;
        Word l = lcm(rules_[i].lhs, rules_[j].lhs);
        std::vector<Segment> ignored;
        Word a = reduce(replace(l, rules_[i].lhs, rules_[i].rhs), ignored);
        ignored.clear();
        Word b = reduce(replace(l, rules_[j].lhs, rules_[j].rhs), ignored);
        if (a != b) {
          push_critical_pair(i, j);
          confluent = false;
        }
      }
    }
    return confluent;
  }

  std::size_t budget_;
  std::size_t reductions_ = 0;
  std::size_t seq_ = 0;
  std::vector<WorkingRule> rules_;
  std::priority_queue<Pending, std::vector<Pending>, LaterFirst> pending_;
  RewriteSystem system_;
};

RewriteSystem orient(const Presentation& p) {
  RewriteSystem rs;
  rs.presentation_ = p;
  const auto& rels = p.relations();
  for (std::size_t i = 0; i < rels.size(); ++i) {
    Word l = to_word(p, rels[i].lhs);
    Word r = to_word(p, rels[i].rhs);
    if (l == r) continue;
    if (compare_graded_lex(l, r) > 0) {
      rs.rules_.push_back({std::move(l), std::move(r), leaf(i, true)});
    } else {
      rs.rules_.push_back({std::move(r), std::move(l), leaf(i, false)});
    }
  }
  return rs;
}

RewriteSystem complete(const Presentation& p, CompletionOptions options) {
  return Completion(p, options.budget).run();
}

Word normal_form_word(const RewriteSystem& rs, const Word& x) {
  if (!rs.completed())
    throw InvalidInput("rewrite system is not completed");
  return rs.reduce(x);
}

MonoidElement normal_form(const RewriteSystem& rs, const MonoidElement& x) {
  const auto& p = rs.presentation();
  return from_word(p, normal_form_word(rs, to_word(p, x)));
}

std::string_view to_string(EqualityCertificate::Kind kind) {
  switch (kind) {
    case EqualityCertificate::Kind::chain:
      return "chain";
    case EqualityCertificate::Kind::common_normal_form:
      return "common_normal_form";
    case EqualityCertificate::Kind::separating:
      return "separating";
  }
  return "separating";
}

namespace {

// Normal form of x together with the derivation x =>* normal form.
std::pair<Word, DerivationPtr> traced_normal_form(const RewriteSystem& rs,
                                                  Word x) {
  std::vector<Segment> trace;
  const auto& rules = rs.rule_words();
  for (;;) {
    auto it = std::find_if(rules.begin(), rules.end(),
                           [&](const auto& r) { return divides(r.lhs, x); });
    if (it == rules.end()) break;
    Word context = minus(x, it->lhs);
    x = replace(x, it->lhs, it->rhs);
    trace.push_back({it->proof, std::move(context), false});
  }
  return {std::move(x), concat(std::move(trace))};
}

}  // namespace

EqualityResult equal(const RewriteSystem& rs, const MonoidElement& u,
                     const MonoidElement& v, std::size_t max_chain) {
  if (!rs.completed())
    throw InvalidInput("rewrite system is not completed");
  const auto& p = rs.presentation();
  auto [nu, du] = traced_normal_form(rs, to_word(p, u));
  auto [nv, dv] = traced_normal_form(rs, to_word(p, v));

  EqualityResult result;
  result.equal = nu == nv;
  result.certificate.lhs_normal_form = from_word(p, nu);
  result.certificate.rhs_normal_form = from_word(p, nv);
  if (!result.equal) {
    result.certificate.kind = EqualityCertificate::Kind::separating;
    return result;
  }

  DerivationPtr chain = concat({{du, {}, false}, {dv, {}, true}});
  if (chain->length > max_chain) {
    result.certificate.kind = EqualityCertificate::Kind::common_normal_form;
    return result;
  }
  std::vector<RawStep> steps;
  flatten(chain, steps);
  result.certificate.kind = EqualityCertificate::Kind::chain;
  // A step immediately undone by its inverse contributes nothing.
  auto& out = result.certificate.chain;
  for (auto& s : steps) {
    Word context = s.context.empty() ? Word(p.generators().size(), 0)
                                     : std::move(s.context);
    RewriteStep step{s.relation, s.forward, from_word(p, context)};
    if (!out.empty() && out.back().relation == step.relation &&
        out.back().forward != step.forward && out.back().context == step.context)
      out.pop_back();
    else
      out.push_back(std::move(step));
  }
  return result;
}

EqualityResult equal(const Presentation& p, const MonoidElement& u,
                     const MonoidElement& v, CompletionOptions options) {
  if (!p.contains(u) || !p.contains(v))
    throw InvalidInput("element outside the presentation's alphabet");
  return equal(complete(p, options), u, v);
}

bool replay_chain(const Presentation& p, const MonoidElement& from,
                  const std::vector<RewriteStep>& chain,
                  const MonoidElement& to) {
  MonoidElement x = from;
  const auto& rels = p.relations();
  for (const auto& step : chain) {
    if (step.relation >= rels.size()) return false;
    const auto& r = rels[step.relation];
    const auto& source = step.forward ? r.lhs : r.rhs;
    const auto& target = step.forward ? r.rhs : r.lhs;
    if (x != step.context + source) return false;
    x = step.context + target;
  }
  return x == to;
}

bool verify_certificate(const RewriteSystem& rs, const MonoidElement& u,
                        const MonoidElement& v, const EqualityResult& result) {
  const auto& c = result.certificate;
  if (normal_form(rs, u) != c.lhs_normal_form ||
      normal_form(rs, v) != c.rhs_normal_form)
    return false;
  switch (c.kind) {
    case EqualityCertificate::Kind::chain:
      return result.equal && replay_chain(rs.presentation(), u, c.chain, v);
    case EqualityCertificate::Kind::common_normal_form:
      return result.equal && c.lhs_normal_form == c.rhs_normal_form;
    case EqualityCertificate::Kind::separating:
      return !result.equal && c.lhs_normal_form != c.rhs_normal_form;
  }
  return false;
}

CongruenceExplorer::CongruenceExplorer(const Presentation& p) {
  for (const auto& r : p.relations())
    relations_.emplace_back(to_word(p, r.lhs), to_word(p, r.rhs));
}

void CongruenceExplorer::neighbours(const Word& x,
                                    std::vector<Word>& out) const {
  for (const auto& [l, r] : relations_) {
    if (divides(l, x)) out.push_back(replace(x, l, r));
    if (divides(r, x)) out.push_back(replace(x, r, l));
  }
}

WordClosure CongruenceExplorer::closure(const Word& x, std::size_t depth,
                                        std::size_t max_states) const {
  WordClosure result;
  result.words.insert(x);
  std::vector<Word> frontier{x}, next, scratch;
  for (std::size_t level = 0; level < depth && !frontier.empty(); ++level) {
    next.clear();
    for (const auto& w : frontier) {
      scratch.clear();
      neighbours(w, scratch);
      for (auto& y : scratch) {
        if (result.words.size() >= max_states) {
          result.truncated = true;
          return result;
        }
        if (result.words.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier.swap(next);
  }
  result.saturated = frontier.empty();
  return result;
}

std::set<MonoidElement> congruence_bfs(const Presentation& p,
                                       const MonoidElement& x,
                                       std::size_t depth) {
  CongruenceExplorer explorer(p);
  auto closure = explorer.closure(to_word(p, x), depth);
  std::set<MonoidElement> out;
  for (const auto& w : closure.words) out.insert(from_word(p, w));
  return out;
}

}  // namespace graphmonoid
