// Regular inner and outer approximations of non-regular languages, with
// exact densities, containment checks against oracles, and gap reports.

#ifndef REGMEASURE_APPROXIMATIONS_HPP
#define REGMEASURE_APPROXIMATIONS_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regmeasure/automata.hpp"
#include "regmeasure/core.hpp"
#include "regmeasure/languages.hpp"

namespace regmeasure {

enum class Direction { inner, outer };

inline constexpr std::size_t kDefaultStateBudget = 200'000;

/// A parameterized pair of approximation sequences for one target language.
/// Either side may be absent: a missing inner side counts as ∅ (density 0),
/// a missing outer side as the full language (density 1).
struct ApproxFamily {
  std::string name;
  LanguageOracle target;
  std::function<Dfa(std::size_t)> inner;
  std::function<Dfa(std::size_t)> outer;
  /// Densities stated in closed form, where one is known for the parameter.
  std::function<std::optional<Rational>(std::size_t)> claimed_inner;
  std::function<std::optional<Rational>(std::size_t)> claimed_outer;

  bool has_inner() const { return static_cast<bool>(inner); }
  bool has_outer() const { return static_cast<bool>(outer); }
};

/// A_k over {a,b}: |w|_a ≢ |w|_b (mod k).
Dfa modk_inner_dfa(std::size_t k);
/// Complement of A_k: an outer approximation of L(a,b).
Dfa modk_outer_dfa(std::size_t k);
/// Union of the complements of the mod-k counters for (a,b) and (a,c), each
/// with a self-loop on the third letter.
Dfa o3_outer_dfa(std::size_t k);
/// Same construction over {x,X,y,Y} for the pairs (x,X) and (y,Y).
Dfa o4_outer_dfa(std::size_t k);
/// Words w1 v w2 with |w1| = |w2| = k and w1 ≠ rev(w2). Minimized.
Dfa pal_inner_dfa(const Alphabet& alphabet, std::size_t k,
                  std::size_t state_budget = kDefaultStateBudget);
/// u A* b over u ∈ A^k other than the length-k prefix of a b a² b a³ b …
Dfa goldstine_inner_dfa(std::size_t k);
/// A* b
Dfa goldstine_outer_dfa();
/// inner: ∪ w c B* over w ∈ L ∩ A^{<n}; outer: B* minus ∪ w c B* over w ∉ L, |w| < n.
Dfa suffix_ext_dfa(const LanguageOracle& base, char c, std::size_t n, Direction direction,
                   std::size_t state_budget = kDefaultStateBudget);
/// The mirror images for B* c L.
Dfa prefix_ext_dfa(const LanguageOracle& base, char c, std::size_t n, Direction direction,
                   std::size_t state_budget = kDefaultStateBudget);
/// B* c w c B* for the shortlex-least w ∈ L ∩ A^{<n}, or ∅ when there is none.
Dfa infix_ext_inner_dfa(const LanguageOracle& base, char c, std::size_t n);

namespace families {

/// Target L(a,b); outer complement(A_k), density 1/k for odd k.
ApproxFamily modk();
/// Target complement(L(a,b)); inner A_k, density (k-1)/k for odd k.
ApproxFamily modk_inner();
ApproxFamily o3();
ApproxFamily o4();
/// Target complement(P_A); inner density 1 - |A|^{-k}.
ApproxFamily pal(const Alphabet& alphabet);
/// Inner density 1/2 - 2^{-k-1}, outer A*b with density 1/2.
ApproxFamily goldstine();
ApproxFamily suffix_ext(const LanguageOracle& base, char c);
ApproxFamily prefix_ext(const LanguageOracle& base, char c);
ApproxFamily infix_ext(const LanguageOracle& base, char c);

}  // namespace families

/// Family names as used on the command line: modk, modk-inner, o3, o4,
/// pal[:symbols], goldstine, suffix-ext:<base>:<c>, prefix-ext:<base>:<c>,
/// infix-ext:<base>:<c>.
ApproxFamily parse_family(std::string_view spec);

/// Checks L(x) ⊆ target (inner) or target ⊆ L(x) (outer) on every word of
/// length ≤ N. Returns the shortlex-least counterexample, or nothing.
std::optional<Word> verify_containment(const Dfa& x, const LanguageOracle& target,
                                       Direction direction, std::size_t max_length,
                                       std::uint64_t budget = kDefaultEnumerationBudget);

struct GapRow {
  std::size_t k = 0;
  Rational inner, outer, gap;
  std::optional<Rational> claimed_inner, claimed_outer;
  bool has_inner = false, has_outer = false;
  std::optional<Word> inner_counterexample, outer_counterexample;

  bool containment_ok() const { return !inner_counterexample && !outer_counterexample; }
};

struct GapReport {
  std::string family;
  std::size_t max_length = 0;
  std::vector<GapRow> rows;
  /// Ratios and Cesàro means of the target up to max_length.
  RatioSeries target_prefix;
};

/// Densities and containment verdicts for every k, in the given order.
/// Per-k work runs concurrently.
GapReport gap_report(const ApproxFamily& family, const std::vector<std::size_t>& ks,
                     std::size_t max_length, std::uint64_t budget = kDefaultEnumerationBudget);

/// A word v ∈ L(x) with |v|_a ≤ m·|v|_b, of the form x' b^{2c} y with c the
/// longest shortest representative in the syntactic monoid. Shortest, then
/// shortlex-least, among those shapes. Throws NullLanguage on null input.
Word majority_escape_witness(const Dfa& x, std::size_t m);

}  // namespace regmeasure

#endif  // REGMEASURE_APPROXIMATIONS_HPP
