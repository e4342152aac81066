#include <gtest/gtest.h>

#include <random>

#include "regmeasure/automata.hpp"
#include "regmeasure/checks.hpp"
#include "regmeasure/dfa_json.hpp"
#include "regmeasure/languages.hpp"
#include "support.hpp"

using namespace regmeasure;
using testing_support::W;
using testing_support::ab;

namespace {

// {a,b}*c over {a,b,c}
Dfa ab_star_c() {
  const Alphabet abc("abc");
  // 0: reading {a,b}*, 1: just read the final c, 2: dead
  return Dfa(abc, 3, 0, {false, true, false}, {0, 0, 1, 2, 2, 2, 2, 2, 2});
}

}  // namespace

TEST(Dfa, RejectsOutOfRangeTransitions) {
  EXPECT_THROW(Dfa(ab(), 1, 0, {true}, {0, 1}), std::invalid_argument);
  EXPECT_THROW(Dfa(ab(), 1, 1, {true}, {0, 0}), std::invalid_argument);
  EXPECT_THROW(Dfa(ab(), 2, 0, {true}, {0, 0, 0, 0}), std::invalid_argument);
}

TEST(Boolean, ComplementInvolution) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Dfa x = random_dfa(rng, ab(), 6);
    EXPECT_EQ(minimize(complement(complement(x))), minimize(x));
  }
}

TEST(Boolean, IntersectionWithComplementIsEmpty) {
  const Dfa a3 = mod_counter_dfa(ab(), 3, 'a', 'b');
  EXPECT_TRUE(is_empty(combine(a3, complement(a3), BoolOp::intersection)));
}

TEST(Boolean, AlphabetMismatch) {
  EXPECT_THROW(combine(Dfa::universal(ab()), Dfa::universal(Alphabet("abc")), BoolOp::union_),
               AlphabetMismatch);
}

TEST(Boolean, InclusionExclusionPerLength) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    const Dfa x = random_dfa(rng, Alphabet("abc"), 5);
    const Dfa y = random_dfa(rng, Alphabet("abc"), 5);
    const auto u = count_words(combine(x, y, BoolOp::union_), 8).counts;
    const auto n = count_words(combine(x, y, BoolOp::intersection), 8).counts;
    const auto cx = count_words(x, 8).counts;
    const auto cy = count_words(y, 8).counts;
    for (std::size_t len = 0; len <= 8; ++len) EXPECT_EQ(u[len] + n[len], cx[len] + cy[len]);
  }
}

TEST(Minimize, EvenLengthHasTwoStates) {
  // Four-state automaton for (AA)* counting length mod 4.
  const Dfa four(ab(), 4, 0, {true, false, true, false}, {1, 1, 2, 2, 3, 3, 0, 0});
  EXPECT_EQ(minimize(four).state_count(), 2u);
  EXPECT_EQ(minimize(four), minimize(machines::even_length(ab())));
}

TEST(Minimize, IdempotentAndLanguagePreserving) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const Dfa x = random_dfa(rng, ab(), 8);
    const Dfa m = minimize(x);
    EXPECT_EQ(minimize(m), m);
    EXPECT_LE(m.state_count(), x.state_count());
    EXPECT_EQ(count_words(m, 10).counts, count_words(x, 10).counts);
    EXPECT_TRUE(equivalent(m, x));
  }
}

TEST(Determinize, SubsetConstruction) {
  // NFA for words whose second-to-last letter is a.
  Nfa n(ab(), 3);
  n.add_initial(0);
  n.add_transition(0, 0, 0);
  n.add_transition(0, 1, 0);
  n.add_transition(0, 0, 1);
  n.add_transition(1, 0, 2);
  n.add_transition(1, 1, 2);
  n.set_accepting(2);
  const Dfa d = minimize(determinize(n));
  EXPECT_EQ(d.state_count(), 4u);
  for (const auto& s : testing_support::all_strings("ab", 6)) {
    const bool want = s.size() >= 2 && s[s.size() - 2] == 'a';
    EXPECT_EQ(d.accepts(W(ab(), s.empty() ? "ε" : s)), want) << s;
  }
}

TEST(Reverse, ReversesLanguage) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 30; ++i) {
    const Dfa x = random_dfa(rng, ab(), 5);
    const Dfa r = reverse(x);
    for_each_word_upto(2, 7, [&](const Word& w) {
      EXPECT_EQ(r.accepts(w), x.accepts(w.reversed()));
      return true;
    });
  }
}

TEST(CountWords, Examples) {
  EXPECT_EQ(count_words(machines::starts_with(ab(), 'a'), 3).counts[3], 4);
  EXPECT_EQ(count_words(mod_counter_dfa(ab(), 3, 'a', 'b'), 1).counts[1], 2);
  EXPECT_EQ(count_words(machines::even_length(ab()), 4).counts[4], 16);
}

TEST(CountWords, AgreesWithEnumeration) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 60; ++i) {
    const Alphabet alphabet(i % 2 ? "ab" : "abc");
    const Dfa x = random_dfa(rng, alphabet, 6);
    const std::size_t n = alphabet.size() == 2 ? 10 : 8;
    const auto brute = census_by_enumeration(alphabet, [&](const Word& w) { return x.accepts(w); }, n);
    EXPECT_EQ(count_words(x, n).counts, brute.counts);
  }
}

TEST(TransferMatrix, RowSums) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    const Dfa x = random_dfa(rng, Alphabet("abc"), 7);
    const TransferMatrix m(x);
    for (State q = 0; q < x.state_count(); ++q) EXPECT_EQ(m.row_sum(q), 3);
  }
}

TEST(ForbiddenWords, LetterStar) {
  const auto w = shortest_forbidden_word(machines::letter_star(ab(), 'a'));
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, W(ab(), "b"));
}

TEST(ForbiddenWords, ModCounterIsDense) {
  EXPECT_FALSE(shortest_forbidden_word(mod_counter_dfa(ab(), 3, 'a', 'b')));
}

TEST(ForbiddenWords, AbStarC) {
  const Alphabet abc("abc");
  const Dfa x = ab_star_c();
  // Both ca and cc are forbidden; ca comes first in shortlex order.
  const auto w = shortest_forbidden_word(x);
  ASSERT_TRUE(w);
  EXPECT_EQ(render_word(abc, *w), "ca");
  EXPECT_TRUE(is_forbidden_word(x, W(abc, "cc")));
  EXPECT_FALSE(is_forbidden_word(x, W(abc, "c")));
  const auto p = shortest_forbidden_prefix(x);
  ASSERT_TRUE(p);
  EXPECT_EQ(render_word(abc, *p), "ca");
}

TEST(ForbiddenWords, DenseMeansEveryShortFactorOccurs) {
  std::mt19937_64 rng(29);
  int dense = 0;
  for (int i = 0; i < 80; ++i) {
    const Dfa x = random_dfa(rng, ab(), 5);
    if (shortest_forbidden_word(x)) continue;
    ++dense;
    for_each_word_upto(2, 4, [&](const Word& w) {
      EXPECT_FALSE(is_empty(combine(x, machines::contains_factor(ab(), w), BoolOp::intersection)));
      return true;
    });
  }
  EXPECT_GT(dense, 10);
}

TEST(ForbiddenWords, AgreesWithBruteForceSearch) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 60; ++i) {
    const Dfa x = random_dfa(rng, ab(), 5);
    const auto w = shortest_forbidden_word(x);
    std::optional<Word> brute;
    for_each_word_upto(2, 6, [&](const Word& u) {
      if (is_empty(combine(x, machines::contains_factor(ab(), u), BoolOp::intersection))) {
        brute = u;
        return false;
      }
      return true;
    });
    if (brute) {
      ASSERT_TRUE(w);
      EXPECT_EQ(*w, *brute);
    }
    if (w && w->size() <= 6) {
      EXPECT_TRUE(brute);
    }
  }
}

TEST(ModCounter, Examples) {
  const Dfa a3 = mod_counter_dfa(3, 'a', 'b');
  EXPECT_EQ(a3.state_count(), 3u);
  EXPECT_FALSE(a3.is_accepting(0));
  EXPECT_TRUE(a3.is_accepting(1));
  EXPECT_TRUE(a3.is_accepting(2));
  EXPECT_TRUE(is_empty(mod_counter_dfa(1, 'a', 'b')));
  const Dfa looped = mod_counter_dfa(3, 'a', 'b', "c");
  EXPECT_TRUE(looped.accepts(W(looped.alphabet(), "cac")));
  EXPECT_THROW(mod_counter_dfa(0, 'a', 'b'), std::invalid_argument);
  EXPECT_THROW(mod_counter_dfa(3, 'a', 'a'), std::invalid_argument);
  EXPECT_THROW(mod_counter_dfa(3, 'a', 'b', "b"), std::invalid_argument);
}

TEST(ModCounter, MatchesDefinition) {
  const Dfa a5 = mod_counter_dfa(ab(), 5, 'a', 'b');
  for_each_word_upto(2, 10, [&](const Word& w) {
    const long diff = static_cast<long>(w.count(0)) - static_cast<long>(w.count(1));
    EXPECT_EQ(a5.accepts(w), ((diff % 5) + 5) % 5 != 0);
    return true;
  });
}

TEST(Infinite, Examples) {
  const Dfa all = Dfa::universal(ab());
  EXPECT_TRUE(language_infinite(all));
  EXPECT_FALSE(is_coinfinite(all));
  const Dfa eps = dfa_for_words(ab(), {Word()});
  EXPECT_FALSE(language_infinite(eps));
  EXPECT_TRUE(is_coinfinite(eps));
  const Dfa evens = machines::even_length(ab());
  EXPECT_TRUE(language_infinite(evens));
  EXPECT_TRUE(is_coinfinite(evens));
}

TEST(ShortlexLeastMember, Examples) {
  EXPECT_EQ(shortlex_least_member(Dfa::universal(ab()), 2), W(ab(), "aaa"));
  EXPECT_EQ(shortlex_least_member(machines::starts_with(ab(), 'b'), 0), W(ab(), "b"));
  EXPECT_FALSE(shortlex_least_member(Dfa::empty(ab()), 0));
  EXPECT_FALSE(shortlex_least_member(dfa_for_words(ab(), {W(ab(), "ab")}), 2));
}

TEST(ShortlexLeastMember, AgreesWithEnumeration) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 60; ++i) {
    const Dfa x = random_dfa(rng, ab(), 6);
    for (std::size_t floor : {0, 3}) {
      std::optional<Word> brute;
      for_each_word_upto(2, 10, [&](const Word& w) {
        if (w.size() > floor && x.accepts(w)) brute = w;
        return !brute;
      });
      const auto got = shortlex_least_member(x, floor);
      if (brute) {
        ASSERT_TRUE(got);
        EXPECT_EQ(*got, *brute);
      }
    }
  }
}

TEST(DfaJson, RoundTripAndSink) {
  const Dfa a3 = mod_counter_dfa(ab(), 3, 'a', 'b');
  EXPECT_EQ(dfa_from_json(dfa_to_json(a3)), a3);
  const Dfa partial = dfa_from_json_text(
      R"({"alphabet":["a","b"],"states":1,"initial":0,"accepting":[0],"delta":[[0,null]]})");
  EXPECT_EQ(partial.state_count(), 2u);
  EXPECT_TRUE(partial.accepts(W(ab(), "aaa")));
  EXPECT_FALSE(partial.accepts(W(ab(), "ab")));
}

TEST(DfaJson, Errors) {
  EXPECT_THROW(dfa_from_json_text("{\"alphabet\": [\"a\"], "), DfaFormatError);
  EXPECT_THROW(dfa_from_json_text(R"({"alphabet":["a"],"states":1,"initial":3,"accepting":[],"delta":[[0]]})"),
               DfaFormatError);
  EXPECT_THROW(dfa_from_json_text(R"({"alphabet":["a"],"states":1,"initial":0,"accepting":[],"delta":[[0,0]]})"),
               DfaFormatError);
  try {
    dfa_from_json_text("{\"alphabet\": [\"a\"], ");
  } catch (const DfaFormatError& e) {
    EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos) << e.what();
  }
}
