#include "regmeasure/core.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace regmeasure {

namespace {

void validate_symbols(const std::string& symbols) {
  if (symbols.empty()) throw std::invalid_argument("alphabet must not be empty");
  if (symbols.size() > std::numeric_limits<Letter>::max())
    throw std::invalid_argument("alphabet too large");
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const auto c = static_cast<unsigned char>(symbols[i]);
    if (!std::isgraph(c))
      throw std::invalid_argument("alphabet symbols must be printable characters");
    if (symbols.find(symbols[i], i + 1) != std::string::npos)
      throw std::invalid_argument(std::string("duplicate alphabet symbol '") + symbols[i] + "'");
  }
}

}  // namespace

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) { validate_symbols(symbols_); }

Alphabet::Alphabet(std::initializer_list<char> symbols) : symbols_(symbols) {
  validate_symbols(symbols_);
}

Letter Alphabet::index_of(char c) const {
  const auto pos = symbols_.find(c);
  if (pos == std::string::npos)
    throw std::invalid_argument(std::string("symbol '") + c + "' not in alphabet " + symbols_);
  return static_cast<Letter>(pos);
}

std::size_t Word::count(Letter l) const {
  return static_cast<std::size_t>(std::count(letters.begin(), letters.end(), l));
}

Word Word::prefix(std::size_t n) const {
  return Word({letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(std::min(n, size()))});
}

Word Word::suffix_from(std::size_t pos) const {
  return Word({letters.begin() + static_cast<std::ptrdiff_t>(std::min(pos, size())), letters.end()});
}

Word Word::reversed() const { return Word({letters.rbegin(), letters.rend()}); }

Word Word::power(std::size_t n) const {
  Word out;
  out.letters.reserve(size() * n);
  for (std::size_t i = 0; i < n; ++i) out += *this;
  return out;
}

Word& Word::operator+=(const Word& other) {
  letters.insert(letters.end(), other.letters.begin(), other.letters.end());
  return *this;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  return a.letters <=> b.letters;
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  Word w;
  if (text == "ε") return w;
  w.letters.reserve(text.size());
  for (char c : text) w.letters.push_back(alphabet.index_of(c));
  return w;
}

std::string render_word(const Alphabet& alphabet, const Word& w) {
  if (w.empty()) return "ε";
  std::string out;
  out.reserve(w.size());
  for (Letter l : w.letters) out.push_back(alphabet.symbol(l));
  return out;
}

BigInt power_of(std::size_t base, std::size_t n) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(n));
}

void for_each_word(std::size_t alphabet_size, std::size_t n,
                   const std::function<void(const Word&)>& visit) {
  Word w(std::vector<Letter>(n, 0));
  while (true) {
    visit(w);
    // odometer increment, last letter fastest
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (w.letters[pos] + 1u < alphabet_size) {
        ++w.letters[pos];
        break;
      }
      w.letters[pos] = 0;
      if (pos == 0) return;
    }
    if (n == 0) return;
  }
}

void for_each_word_upto(std::size_t alphabet_size, std::size_t max_length,
                        const std::function<bool(const Word&)>& visit) {
  for (std::size_t n = 0; n <= max_length; ++n) {
    bool stop = false;
    for_each_word(alphabet_size, n, [&](const Word& w) {
      if (!stop && !visit(w)) stop = true;
    });
    if (stop) return;
  }
}

std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t n) {
  std::vector<Word> out;
  for_each_word(alphabet.size(), n, [&](const Word& w) { out.push_back(w); });
  return out;
}

RatioSeries ratio_and_cesaro(const LengthCensus& census) {
  RatioSeries out;
  out.ratios.reserve(census.counts.size());
  out.cesaro.reserve(census.counts.size());
  Rational running = 0;
  for (std::size_t n = 0; n < census.counts.size(); ++n) {
    out.cesaro.push_back(n == 0 ? Rational(0) : running / Rational(BigInt(n)));
    Rational r(census.counts[n], power_of(census.alphabet_size, n));
    running += r;
    out.ratios.push_back(std::move(r));
  }
  return out;
}

void check_enumeration_budget(std::size_t alphabet_size, std::size_t max_length,
                              std::uint64_t budget) {
  if (power_of(alphabet_size, max_length) > BigInt(budget)) {
    throw ResourceError("enumeration of " + std::to_string(alphabet_size) + "^" +
                        std::to_string(max_length) + " words exceeds budget " +
                        std::to_string(budget));
  }
}

LengthCensus census_by_enumeration(const Alphabet& alphabet,
                                   const std::function<bool(const Word&)>& member,
                                   std::size_t max_length, std::uint64_t budget) {
  check_enumeration_budget(alphabet.size(), max_length, budget);
  LengthCensus census;
  census.alphabet_size = alphabet.size();
  census.counts.resize(max_length + 1);
  for (std::size_t n = 0; n <= max_length; ++n) {
    std::uint64_t hits = 0;
    for_each_word(alphabet.size(), n, [&](const Word& w) { hits += member(w) ? 1 : 0; });
    census.counts[n] = hits;
  }
  return census;
}

std::string to_string(const BigInt& n) { return n.str(); }

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (unsigned i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

}  // namespace regmeasure
