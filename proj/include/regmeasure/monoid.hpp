// Transition monoids of minimal automata, Green's relations, and the
// non-primitive word witness for non-null regular languages.

#ifndef REGMEASURE_MONOID_HPP
#define REGMEASURE_MONOID_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "regmeasure/automata.hpp"
#include "regmeasure/core.hpp"

namespace regmeasure {

using Element = std::uint32_t;
/// t[q] = state reached from q after reading the element's words.
using Transformation = std::vector<State>;

inline constexpr std::size_t kDefaultMonoidBudget = 50'000;

/// Raised by operations that are only meaningful for non-null languages.
class NullLanguage : public std::invalid_argument {
 public:
  NullLanguage() : std::invalid_argument("no guarantee for null languages") {}
};

struct TransitionMonoid;

/// Minimizes x and builds its transition monoid. Throws ResourceError when the
/// monoid has more than budget elements.
TransitionMonoid transition_monoid(const Dfa& x, std::size_t budget = kDefaultMonoidBudget);

/// Transition monoid of a minimal DFA. Elements are numbered in the shortlex
/// order of their shortest representatives, so element 0 is the identity.
/// Products are computed on demand by composing transformations.
class Monoid {
 public:
  const Dfa& automaton() const { return dfa_; }
  const Alphabet& alphabet() const { return dfa_.alphabet(); }
  std::size_t size() const { return elements_.size(); }

  Element identity() const { return 0; }
  Element generator(Letter a) const { return generators_.at(a); }
  const Transformation& transformation(Element e) const { return elements_.at(e); }
  /// Shortlex-least word mapping to e.
  const Word& witness(Element e) const { return witnesses_.at(e); }
  /// Longest of the shortest representatives.
  std::size_t max_witness_length() const;

  /// e·f: first e, then f.
  Element product(Element e, Element f) const;
  /// Image of w under the syntactic morphism.
  Element image(const Word& w) const;
  std::optional<Element> find(const Transformation& t) const;

 private:
  friend TransitionMonoid transition_monoid(const Dfa& x, std::size_t budget);

  struct Hash {
    std::size_t operator()(const Transformation& t) const;
  };

  Dfa dfa_;
  std::vector<Transformation> elements_;
  std::vector<Word> witnesses_;
  std::vector<Element> generators_;
  std::unordered_map<Transformation, Element, Hash> index_;

  explicit Monoid(Dfa dfa) : dfa_(std::move(dfa)) {}
};

/// Elements whose transformation sends the initial state to an accepting state.
struct AcceptSet {
  std::vector<bool> member;

  bool contains(Element e) const { return member.at(e); }
  std::vector<Element> elements() const;
};

struct TransitionMonoid {
  Monoid monoid;
  AcceptSet accept;
};

struct GreenClasses {
  /// Class index of each element, per relation.
  std::vector<std::size_t> r, l, j, h;
  std::size_t r_count = 0, l_count = 0, j_count = 0, h_count = 0;
  /// below[J] lists the J-classes directly beneath J (edges of the condensed
  /// two-sided Cayley graph).
  std::vector<std::vector<std::size_t>> below;

  bool j_minimal(std::size_t j_class) const { return below.at(j_class).empty(); }
  /// J-class a lies at or below J-class b.
  bool j_leq(std::size_t a, std::size_t b) const;
  std::vector<Element> members(const std::vector<std::size_t>& relation, std::size_t cls) const;
};

GreenClasses green_classes(const Monoid& m);

/// Least n ≥ 1 with t^n idempotent.
std::size_t idempotent_power(const Monoid& m, Element t);

struct NonprimitiveWitness {
  Word word;
  std::size_t n = 1;
  /// η(word), a J-minimal element of the accept set.
  Element element = 0;
};

/// Non-empty w and n with w^{mn+1} in L(x) for every m ≥ 1. Membership and
/// non-primitivity are checked for m = 1, 2, 3 before returning.
/// Throws NullLanguage when x has density 0.
NonprimitiveWitness nonprimitive_witness(const Dfa& x, std::size_t budget = kDefaultMonoidBudget);

/// DFA over the monoid elements: e --a--> e·η(a), initial identity.
Dfa element_dfa(const Monoid& m, const std::vector<bool>& accepting);

/// Density of η⁻¹(s).
Rational jclass_language_density(const Monoid& m, Element s);
Rational jclass_language_density(const Dfa& x, Element s, std::size_t budget = kDefaultMonoidBudget);

}  // namespace regmeasure

#endif  // REGMEASURE_MONOID_HPP
