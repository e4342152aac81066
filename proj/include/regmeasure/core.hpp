// Alphabets, words, exact numbers and length censuses shared by every module.

#ifndef REGMEASURE_CORE_HPP
#define REGMEASURE_CORE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace regmeasure {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Non-negative exact word count.
using BigCount = BigInt;

/// Index of a symbol inside its alphabet.
using Letter = std::uint8_t;

/// Raised when a computation would exceed a configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when two automata (or an automaton and an oracle) disagree on the alphabet.
class AlphabetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ordered set of printable single-character symbols. Symbol order is the
/// letter order used by shortlex comparisons.
class Alphabet {
 public:
  explicit Alphabet(std::string_view symbols);
  Alphabet(std::initializer_list<char> symbols);

  std::size_t size() const { return symbols_.size(); }
  char symbol(Letter l) const { return symbols_.at(l); }
  const std::string& symbols() const { return symbols_; }

  bool contains(char c) const { return symbols_.find(c) != std::string::npos; }
  Letter index_of(char c) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string symbols_;
};

/// A finite word stored as letter indices. Comparison is shortlex
/// (length first, then lexicographic by letter index).
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  Letter operator[](std::size_t i) const { return letters[i]; }

  std::size_t count(Letter l) const;
  Word prefix(std::size_t n) const;
  Word suffix_from(std::size_t pos) const;
  Word reversed() const;
  Word power(std::size_t n) const;

  Word& operator+=(const Word& other);
  Word& push_back(Letter l) {
    letters.push_back(l);
    return *this;
  }

  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }
  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);
};

/// Parses a word written with the alphabet's symbols. Throws std::invalid_argument
/// on unknown symbols.
Word parse_word(const Alphabet& alphabet, std::string_view text);

/// Renders a word with the alphabet's symbols; the empty word renders as "ε".
std::string render_word(const Alphabet& alphabet, const Word& w);

/// Counts of accepted words per length n = 0..N.
struct LengthCensus {
  std::size_t alphabet_size = 0;
  std::vector<BigCount> counts;

  std::size_t max_length() const { return counts.empty() ? 0 : counts.size() - 1; }
};

struct RatioSeries {
  std::vector<Rational> ratios;
  /// cesaro[0] is unused (the mean over an empty prefix is undefined) and holds 0.
  std::vector<Rational> cesaro;
};

/// Default number of membership tests a brute-force enumeration may perform.
inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 26;

/// |A|^n as an exact integer.
BigInt power_of(std::size_t base, std::size_t n);

/// All |A|^n words of length n in shortlex order.
std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t n);

/// Calls visit(w) for every word of length n in lexicographic order.
void for_each_word(std::size_t alphabet_size, std::size_t n,
                   const std::function<void(const Word&)>& visit);

/// Calls visit(w) for every word of length <= max_length in shortlex order.
/// Stops early when visit returns false.
void for_each_word_upto(std::size_t alphabet_size, std::size_t max_length,
                        const std::function<bool(const Word&)>& visit);

RatioSeries ratio_and_cesaro(const LengthCensus& census);

/// Throws ResourceError when |A|^N exceeds the budget.
void check_enumeration_budget(std::size_t alphabet_size, std::size_t max_length,
                              std::uint64_t budget);

/// Exhaustive census of a membership predicate.
LengthCensus census_by_enumeration(const Alphabet& alphabet,
                                   const std::function<bool(const Word&)>& member,
                                   std::size_t max_length,
                                   std::uint64_t budget = kDefaultEnumerationBudget);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& n);

BigInt binomial(unsigned n, unsigned k);

}  // namespace regmeasure

#endif  // REGMEASURE_CORE_HPP
