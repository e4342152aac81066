#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "regmeasure/automata.hpp"
#include "regmeasure/core.hpp"
#include "regmeasure/languages.hpp"
#include "support.hpp"

using namespace regmeasure;
using testing_support::W;
using testing_support::ab;

namespace {

std::vector<std::string> rendered(const Alphabet& a, const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(render_word(a, w));
  return out;
}

}  // namespace

TEST(Alphabet, RejectsEmptyAndDuplicates) {
  EXPECT_THROW(Alphabet(""), std::invalid_argument);
  EXPECT_THROW(Alphabet("aba"), std::invalid_argument);
  EXPECT_THROW(Alphabet(std::string_view("a\n")), std::invalid_argument);
  const Alphabet a("ba");
  EXPECT_EQ(a.index_of('b'), 0);
  EXPECT_EQ(a.index_of('a'), 1);
  EXPECT_THROW(a.index_of('c'), std::invalid_argument);
}

TEST(Words, ShortlexOrder) {
  EXPECT_LT(W(ab(), "b"), W(ab(), "aa"));
  EXPECT_LT(W(ab(), "ab"), W(ab(), "ba"));
  EXPECT_LT(Word(), W(ab(), "a"));
  EXPECT_EQ(render_word(ab(), Word()), "ε");
  EXPECT_EQ(parse_word(ab(), "ε"), Word());
  EXPECT_EQ(W(ab(), "ab").power(3), W(ab(), "ababab"));
  EXPECT_EQ(W(ab(), "aab").reversed(), W(ab(), "baa"));
}

TEST(EnumerateWords, Examples) {
  EXPECT_EQ(rendered(ab(), enumerate_words(ab(), 2)), (std::vector<std::string>{"aa", "ab", "ba", "bb"}));
  EXPECT_EQ(rendered(ab(), enumerate_words(ab(), 0)), (std::vector<std::string>{"ε"}));
  const Alphabet abc("abc");
  EXPECT_EQ(rendered(abc, enumerate_words(abc, 1)), (std::vector<std::string>{"a", "b", "c"}));
}

TEST(EnumerateWords, CountDistinctSorted) {
  const Alphabet abc("abc");
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto ws = enumerate_words(abc, n);
    EXPECT_EQ(BigInt(ws.size()), power_of(3, n));
    EXPECT_TRUE(std::is_sorted(ws.begin(), ws.end()));
    EXPECT_EQ(std::set<Word>(ws.begin(), ws.end()).size(), ws.size());
    auto copy = ws;
    std::sort(copy.begin(), copy.end());
    EXPECT_EQ(copy, ws);
  }
}

TEST(ForEachWordUpto, ShortlexAndEarlyStop) {
  std::vector<Word> seen;
  for_each_word_upto(2, 3, [&](const Word& w) {
    seen.push_back(w);
    return true;
  });
  EXPECT_EQ(seen.size(), 15u);
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  std::size_t visits = 0;
  for_each_word_upto(2, 10, [&](const Word&) { return ++visits < 4; });
  EXPECT_EQ(visits, 4u);
}

TEST(RatioAndCesaro, AlternatingEvens) {
  const LengthCensus c = count_words(machines::even_length(ab()), 4);
  const RatioSeries s = ratio_and_cesaro(c);
  EXPECT_EQ(s.ratios, (std::vector<Rational>{1, 0, 1, 0, 1}));
  EXPECT_EQ(s.cesaro[4], Rational(1, 2));
}

TEST(RatioAndCesaro, EmptyLanguage) {
  const RatioSeries s = ratio_and_cesaro(count_words(Dfa::empty(ab()), 6));
  for (const auto& r : s.ratios) EXPECT_EQ(r, 0);
  for (const auto& r : s.cesaro) EXPECT_EQ(r, 0);
}

TEST(RatioAndCesaro, StartsWithA) {
  const RatioSeries s = ratio_and_cesaro(count_words(machines::starts_with(ab(), 'a'), 40));
  EXPECT_EQ(s.ratios[0], 0);
  for (std::size_t n = 1; n <= 40; ++n) EXPECT_EQ(s.ratios[n], Rational(1, 2));
  // cesaro[n] = (n-1)/(2n)
  EXPECT_EQ(s.cesaro[40], Rational(39, 80));
}

TEST(RatioAndCesaro, MeanIdentityAndBounds) {
  const LengthCensus c = census_by_enumeration(oracles::semi_dyck(), 12);
  const RatioSeries s = ratio_and_cesaro(c);
  Rational sum = 0;
  for (std::size_t n = 0; n < s.ratios.size(); ++n) {
    EXPECT_GE(s.ratios[n], 0);
    EXPECT_LE(s.ratios[n], 1);
    EXPECT_GE(s.cesaro[n], 0);
    EXPECT_LE(s.cesaro[n], 1);
    if (n > 0) {
      EXPECT_EQ(s.cesaro[n] * Rational(static_cast<long>(n)), sum);
    }
    sum += s.ratios[n];
  }
}

TEST(CensusByEnumeration, Examples) {
  EXPECT_EQ(census_by_enumeration(oracles::semi_dyck(), 4).counts[4], 2);
  EXPECT_EQ(census_by_enumeration(oracles::primitive(ab()), 4).counts[4], 12);
  EXPECT_EQ(census_by_enumeration(oracles::majority(1), 3).counts[3], 4);
}

TEST(CensusByEnumeration, BudgetGuard) {
  EXPECT_THROW(census_by_enumeration(oracles::semi_dyck(), 30), ResourceError);
  EXPECT_THROW(census_by_enumeration(oracles::semi_dyck(), 10, 1000), ResourceError);
  EXPECT_NO_THROW(census_by_enumeration(oracles::semi_dyck(), 10, 1024));
}

TEST(CensusByEnumeration, OrderIndependent) {
  // Counting the same predicate over a reversed alphabet order gives the same counts.
  const auto pal = oracles::palindromes(Alphabet("abc"));
  const auto pal_rev = oracles::palindromes(Alphabet("cba"));
  EXPECT_EQ(census_by_enumeration(pal, 7).counts, census_by_enumeration(pal_rev, 7).counts);
  EXPECT_EQ(census_by_enumeration(pal, 7).counts, census_by_enumeration(pal, 7).counts);
}

TEST(Exact, RationalRendering) {
  EXPECT_EQ(to_string(Rational(6, 8)), "3/4");
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
  EXPECT_EQ(to_string(Rational(0)), "0");
  EXPECT_EQ(to_string(power_of(2, 100)), "1267650600228229401496703205376");
  EXPECT_EQ(binomial(20, 10), 184756);
  EXPECT_EQ(binomial(3, 5), 0);
}
