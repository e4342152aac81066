// Membership oracles (mostly non-regular) with optional closed-form counters.

#ifndef REGMEASURE_LANGUAGES_HPP
#define REGMEASURE_LANGUAGES_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "regmeasure/automata.hpp"
#include "regmeasure/core.hpp"

namespace regmeasure {

/// A named membership predicate over an explicit alphabet.
struct LanguageOracle {
  std::string name;
  Alphabet alphabet;
  std::function<bool(const Word&)> member;
  /// Exact |L ∩ A^n|, when a closed form is known.
  std::function<BigCount(std::size_t)> counter;

  bool contains(const Word& w) const { return member(w); }
  bool has_counter() const { return static_cast<bool>(counter); }
};

LengthCensus census_by_enumeration(const LanguageOracle& oracle, std::size_t max_length,
                                   std::uint64_t budget = kDefaultEnumerationBudget);

/// Counts from the oracle's closed form. Throws std::invalid_argument when it has none.
LengthCensus closed_counts(const LanguageOracle& oracle, std::size_t max_length);
BigCount closed_count(const LanguageOracle& oracle, std::size_t n);

/// Letter-to-word morphism used to generate infinite words h^ω(seed).
struct Morphism {
  Alphabet alphabet;
  std::vector<Word> images;

  /// Parses "a=ab,b=a". The alphabet is the rule heads in order.
  static Morphism parse(std::string_view spec);
  Word apply(const Word& w) const;
};

/// An infinite word given by its finite prefixes.
struct InfiniteWord {
  Alphabet alphabet;
  std::string name;
  /// Returns the prefix of length n.
  std::function<Word(std::size_t)> prefix;
};

/// h^ω(seed). Throws std::invalid_argument when h is not prolongable on seed
/// (h(seed) must start with seed and be longer than one letter) or when the
/// iteration stops growing.
InfiniteWord fixed_point(const Morphism& h, char seed);

/// a^1 b a^2 b a^3 b …
InfiniteWord goldstine_word();

/// Prefixes of h^ω(seed) of length 0..N, sorted shortlex.
std::vector<Word> coprefix_prefixes(const Morphism& h, char seed, std::size_t max_length);

/// Möbius function.
int moebius(std::size_t n);
BigInt catalan(unsigned n);
bool is_primitive(const Word& w);

/// Word-level predicates behind the oracles, usable without constructing one.
namespace predicates {
bool semi_dyck(const Word& w);
bool goldstine(const Word& w);
bool kemp_s1(const Word& w);
bool kemp_s2(const Word& w);
}  // namespace predicates

namespace oracles {

/// Balanced words over {a,b} whose prefixes never have more b's than a's.
LanguageOracle semi_dyck();
/// {w : |w|_a = |w|_b} over the given alphabet.
LanguageOracle count_eq(const Alphabet& alphabet, char a, char b);
LanguageOracle palindromes(const Alphabet& alphabet);
/// {w ∈ {a,b,c}* : |w|_a = |w|_b or |w|_a = |w|_c}
LanguageOracle o3();
/// Over {x,X,y,Y} (X and Y stand for x̄ and ȳ): |w|_x = |w|_X or |w|_y = |w|_Y.
LanguageOracle o4();
/// a^{n1} b … a^{np} b with p ≥ 1 and n_i ≠ i for some i.
LanguageOracle goldstine();
/// S1 = a(b^i a^i)*, i ≥ 1, over {a,b}.
LanguageOracle kemp_s1();
/// S2 = (a^i b^{2i})* a^+, i ≥ 1, over {a,b}.
LanguageOracle kemp_s2();
/// S1 ∪ S2 over {a,b}.
LanguageOracle kemp_base();
/// (S1 ∪ S2) c {a,b,c}*.
LanguageOracle kemp();
/// {w ∈ {a,b}* : |w|_a > m·|w|_b}
LanguageOracle majority(std::size_t m);
LanguageOracle primitive(const Alphabet& alphabet);
/// a* over {a}.
LanguageOracle letter_star();
/// Complement of the prefix set of an infinite word.
LanguageOracle coprefix(const InfiniteWord& word);
LanguageOracle coprefix(const Morphism& h, char seed);
/// L c (A ∪ {c})*
LanguageOracle suffix_extension(const LanguageOracle& base, char c);
/// (A ∪ {c})* c L
LanguageOracle prefix_extension(const LanguageOracle& base, char c);
/// (A ∪ {c})* c L c (A ∪ {c})*
LanguageOracle infix_extension(const LanguageOracle& base, char c);
LanguageOracle complement(const LanguageOracle& base);
LanguageOracle from_dfa(const Dfa& dfa, std::string name);

}  // namespace oracles

/// Default bound on the number of automata the diagonal program may examine.
inline constexpr std::uint64_t kDefaultDiagonalBudget = 1'000'000;

/// i-th DFA of the pinned enumeration over an alphabet. Machines are grouped
/// by state count s = 1, 2, …; within a group they are ordered by the byte
/// string (accepting flag of states 0..s-1, then delta row-major), compared
/// lexicographically. The initial state is always 0.
Dfa pinned_dfa(const Alphabet& alphabet, std::uint64_t index);

/// The recursive null language built by diagonalizing against the pinned
/// enumeration: for each co-infinite machine in turn it commits to the
/// shortlex-least rejected word longer than the previous commitment.
class DiagonalLanguage {
 public:
  struct Step {
    std::uint64_t machine;  ///< index of the co-infinite automaton
    Word word;              ///< the committed word u
  };

  explicit DiagonalLanguage(Alphabet alphabet, std::uint64_t budget = kDefaultDiagonalBudget);

  const Alphabet& alphabet() const { return alphabet_; }
  /// Runs the program on w. Throws ResourceError when the budget is exhausted.
  bool contains(const Word& w) const;
  /// The first n committed words (and the automata that produced them).
  std::vector<Step> steps(std::size_t n) const;

 private:
  const Step& step(std::size_t i) const;

  Alphabet alphabet_;
  std::uint64_t budget_;
  mutable std::mutex mutex_;
  mutable std::vector<Step> cache_;
  mutable std::uint64_t next_machine_ = 0;
};

namespace oracles {
LanguageOracle diagonal(const Alphabet& alphabet, std::uint64_t budget = kDefaultDiagonalBudget);
}  // namespace oracles

/// Builds an oracle from its command-line name: dyck, counteq:a,b, pal, o3, o4,
/// goldstine, kemp, s1, s2, kemp-base, astar, majority:m, primitive,
/// coprefix:<rules>, suffix-ext:<base>:<c>, prefix-ext:<base>:<c>,
/// infix-ext:<base>:<c>, not:<base>, diagonal. pal and primitive accept an
/// optional ":<symbols>" alphabet (default "ab").
LanguageOracle parse_oracle(std::string_view spec);

}  // namespace regmeasure

#endif  // REGMEASURE_LANGUAGES_HPP
