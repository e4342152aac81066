#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "regmeasure/checks.hpp"
#include "regmeasure/density.hpp"
#include "regmeasure/languages.hpp"
#include "regmeasure/monoid.hpp"
#include "support.hpp"

using namespace regmeasure;
using testing_support::W;
using testing_support::ab;

namespace {

std::vector<Dfa> small_random_machines(std::uint64_t seed, std::size_t count, std::size_t max_elements) {
  std::mt19937_64 rng(seed);
  std::vector<Dfa> out;
  while (out.size() < count) {
    const Dfa x = random_dfa(rng, ab(), 4);
    // skip the many random machines whose minimal automaton is tiny
    const std::size_t size = transition_monoid(x).monoid.size();
    if (size >= 3 && size <= max_elements) out.push_back(x);
  }
  return out;
}

using Ideal = std::set<Element>;

Ideal right_ideal(const Monoid& m, Element e) {
  Ideal s;
  for (Element f = 0; f < m.size(); ++f) s.insert(m.product(e, f));
  return s;
}

Ideal left_ideal(const Monoid& m, Element e) {
  Ideal s;
  for (Element f = 0; f < m.size(); ++f) s.insert(m.product(f, e));
  return s;
}

Ideal two_sided_ideal(const Monoid& m, Element e) {
  Ideal s;
  for (Element f = 0; f < m.size(); ++f)
    for (Element g = 0; g < m.size(); ++g) s.insert(m.product(m.product(f, e), g));
  return s;
}

}  // namespace

TEST(TransitionMonoid, Examples) {
  const auto evens = transition_monoid(machines::even_length(ab()));
  EXPECT_EQ(evens.monoid.size(), 2u);
  EXPECT_EQ(evens.accept.elements(), std::vector<Element>{0});

  const auto all = transition_monoid(Dfa::universal(ab()));
  EXPECT_EQ(all.monoid.size(), 1u);
  EXPECT_EQ(all.accept.elements(), std::vector<Element>{0});

  const auto a3 = transition_monoid(mod_counter_dfa(ab(), 3, 'a', 'b'));
  ASSERT_EQ(a3.monoid.size(), 3u);
  const Element g = a3.monoid.generator(0);
  EXPECT_EQ(a3.monoid.product(g, g), a3.monoid.generator(1));
  EXPECT_EQ(a3.monoid.product(g, a3.monoid.generator(1)), a3.monoid.identity());
  EXPECT_EQ(a3.accept.elements(), (std::vector<Element>{1, 2}));
}

TEST(TransitionMonoid, BudgetIsEnforced) {
  EXPECT_THROW(transition_monoid(mod_counter_dfa(ab(), 7, 'a', 'b'), 3), ResourceError);
  EXPECT_NO_THROW(transition_monoid(mod_counter_dfa(ab(), 7, 'a', 'b'), 7));
}

TEST(TransitionMonoid, ClosureAndMorphism) {
  std::mt19937_64 rng(61);
  for (const Dfa& x : small_random_machines(67, 20, 2000)) {
    const auto tm = transition_monoid(x);
    const Monoid& m = tm.monoid;
    const Dfa& d = m.automaton();
    for (Element e = 0; e < std::min<std::size_t>(m.size(), 40); ++e)
      for (Element f = 0; f < std::min<std::size_t>(m.size(), 40); ++f) {
        const Element ef = m.product(e, f);
        ASSERT_LT(ef, m.size());
        for (State q = 0; q < d.state_count(); ++q)
          EXPECT_EQ(m.transformation(ef)[q], m.transformation(f)[m.transformation(e)[q]]);
      }
    std::uniform_int_distribution<int> len(0, 6), letter(0, 1);
    for (int i = 0; i < 50; ++i) {
      Word u, v;
      for (int n = len(rng); n > 0; --n) u.push_back(static_cast<Letter>(letter(rng)));
      for (int n = len(rng); n > 0; --n) v.push_back(static_cast<Letter>(letter(rng)));
      EXPECT_EQ(m.image(u + v), m.product(m.image(u), m.image(v)));
      for (State q = 0; q < d.state_count(); ++q) EXPECT_EQ(m.transformation(m.image(u))[q], d.run(u, q));
    }
  }
}

TEST(TransitionMonoid, WitnessesAreShortlexLeast) {
  for (const Dfa& x : small_random_machines(71, 15, 200)) {
    const auto tm = transition_monoid(x);
    const Monoid& m = tm.monoid;
    std::map<Element, Word> first;
    for_each_word_upto(2, m.max_witness_length(), [&](const Word& w) {
      first.try_emplace(m.image(w), w);
      return true;
    });
    ASSERT_EQ(first.size(), m.size());
    for (Element e = 0; e < m.size(); ++e) {
      EXPECT_EQ(m.witness(e), first.at(e));
      if (e > 0) {
        EXPECT_LT(m.witness(e - 1), m.witness(e));
      }
    }
  }
}

TEST(TransitionMonoid, AcceptSetRecognizesLanguage) {
  for (const Dfa& x : small_random_machines(73, 20, 2000)) {
    const auto tm = transition_monoid(x);
    for_each_word_upto(2, 9, [&](const Word& w) {
      EXPECT_EQ(tm.accept.contains(tm.monoid.image(w)), x.accepts(w));
      return true;
    });
    EXPECT_EQ(density(element_dfa(tm.monoid, tm.accept.member)), density(x));
  }
}

TEST(Green, Examples) {
  const auto a3 = transition_monoid(mod_counter_dfa(ab(), 3, 'a', 'b'));
  const GreenClasses g = green_classes(a3.monoid);
  EXPECT_EQ(g.r_count, 1u);
  EXPECT_EQ(g.l_count, 1u);
  EXPECT_EQ(g.j_count, 1u);
  EXPECT_EQ(g.h_count, 1u);

  const GreenClasses t = green_classes(transition_monoid(Dfa::universal(ab())).monoid);
  EXPECT_EQ(t.j_count, 1u);
  EXPECT_TRUE(t.j_minimal(0));

  // {a}A*: identity above the constant maps a and b
  const auto s = transition_monoid(machines::starts_with(ab(), 'a'));
  ASSERT_EQ(s.monoid.size(), 3u);
  const GreenClasses sg = green_classes(s.monoid);
  EXPECT_EQ(sg.j_count, 2u);
  EXPECT_FALSE(sg.j_minimal(sg.j[0]));
  EXPECT_TRUE(sg.j_minimal(sg.j[1]));
  EXPECT_EQ(sg.j[1], sg.j[2]);
  EXPECT_TRUE(sg.j_leq(sg.j[1], sg.j[0]));
  EXPECT_FALSE(sg.j_leq(sg.j[0], sg.j[1]));
}

TEST(Green, MatchesIdealDefinitions) {
  for (const Dfa& x : small_random_machines(79, 25, 60)) {
    const Monoid& m = transition_monoid(x).monoid;
    const GreenClasses g = green_classes(m);
    std::vector<Ideal> r, l, j;
    for (Element e = 0; e < m.size(); ++e) {
      r.push_back(right_ideal(m, e));
      l.push_back(left_ideal(m, e));
      j.push_back(two_sided_ideal(m, e));
    }
    for (Element e = 0; e < m.size(); ++e)
      for (Element f = 0; f < m.size(); ++f) {
        EXPECT_EQ(g.r[e] == g.r[f], r[e] == r[f]);
        EXPECT_EQ(g.l[e] == g.l[f], l[e] == l[f]);
        EXPECT_EQ(g.j[e] == g.j[f], j[e] == j[f]);
        EXPECT_EQ(g.h[e] == g.h[f], g.r[e] == g.r[f] && g.l[e] == g.l[f]);
        // J-order is ideal inclusion
        EXPECT_EQ(g.j_leq(g.j[e], g.j[f]), std::includes(j[f].begin(), j[f].end(), j[e].begin(), j[e].end()));
      }
  }
}

TEST(Green, HClassOfIdempotentIsGroup) {
  for (const Dfa& x : small_random_machines(83, 20, 300)) {
    const Monoid& m = transition_monoid(x).monoid;
    const GreenClasses g = green_classes(m);
    for (Element e = 0; e < m.size(); ++e) {
      if (m.product(e, e) != e) continue;
      const auto h = g.members(g.h, g.h[e]);
      for (Element u : h) {
        EXPECT_EQ(m.product(e, u), u);
        EXPECT_EQ(m.product(u, e), u);
        bool inverse = false;
        for (Element v : h) {
          EXPECT_EQ(g.h[m.product(u, v)], g.h[e]);
          inverse = inverse || m.product(u, v) == e;
        }
        EXPECT_TRUE(inverse);
      }
    }
  }
}

TEST(IdempotentPower, Examples) {
  const Monoid& a3 = transition_monoid(mod_counter_dfa(ab(), 3, 'a', 'b')).monoid;
  EXPECT_EQ(idempotent_power(a3, a3.identity()), 1u);
  EXPECT_EQ(idempotent_power(a3, a3.generator(0)), 3u);
  for (const Dfa& x : small_random_machines(89, 10, 500)) {
    const Monoid& m = transition_monoid(x).monoid;
    for (Element e = 0; e < m.size(); ++e) {
      const std::size_t n = idempotent_power(m, e);
      EXPECT_LE(n, m.size());
      Element p = e;
      for (std::size_t i = 1; i < n; ++i) p = m.product(p, e);
      EXPECT_EQ(m.product(p, p), p);
      if (m.product(e, e) == e) {
        EXPECT_EQ(n, 1u);
      }
    }
  }
}

TEST(NonprimitiveWitness, Examples) {
  const auto all = nonprimitive_witness(Dfa::universal(ab()));
  EXPECT_EQ(render_word(ab(), all.word), "a");
  EXPECT_EQ(all.n, 1u);
  const auto a3 = nonprimitive_witness(mod_counter_dfa(ab(), 3, 'a', 'b'));
  EXPECT_EQ(render_word(ab(), a3.word), "a");
  EXPECT_EQ(a3.n, 3u);
  EXPECT_THROW(nonprimitive_witness(machines::letter_star(ab(), 'a')), NullLanguage);
}

TEST(NonprimitiveWitness, SoundOnRandomNonNullMachines) {
  std::mt19937_64 rng(97);
  const auto q = oracles::primitive(ab());
  int tried = 0;
  while (tried < 40) {
    const Dfa x = random_dfa(rng, ab(), 6);
    if (is_null(x)) continue;
    ++tried;
    const auto w = nonprimitive_witness(x);
    ASSERT_FALSE(w.word.empty());
    for (std::size_t m = 1; m <= 5; ++m) {
      const Word p = w.word.power(m * w.n + 1);
      EXPECT_TRUE(x.accepts(p));
      EXPECT_FALSE(q.contains(p));
    }
    const auto tm = transition_monoid(x);
    const GreenClasses g = green_classes(tm.monoid);
    EXPECT_EQ(tm.monoid.image(w.word), w.element);
    EXPECT_TRUE(tm.accept.contains(w.element));
    EXPECT_TRUE(g.j_minimal(g.j[w.element]));
  }
}

TEST(JClassDensity, Examples) {
  const Dfa a3 = mod_counter_dfa(ab(), 3, 'a', 'b');
  const Monoid& m3 = transition_monoid(a3).monoid;
  EXPECT_EQ(jclass_language_density(m3, m3.generator(0)), Rational(1, 3));
  EXPECT_EQ(jclass_language_density(a3, 1), Rational(1, 3));
  const Monoid& s = transition_monoid(machines::starts_with(ab(), 'a')).monoid;
  EXPECT_EQ(jclass_language_density(s, s.identity()), 0);
  const Monoid& t = transition_monoid(Dfa::universal(ab())).monoid;
  EXPECT_EQ(jclass_language_density(t, t.identity()), 1);
}

TEST(JClassDensity, PartitionAndNullNonMinimal) {
  for (const Dfa& x : small_random_machines(101, 15, 150)) {
    const Monoid& m = transition_monoid(x).monoid;
    const GreenClasses g = green_classes(m);
    Rational total = 0;
    for (Element e = 0; e < m.size(); ++e) {
      const Rational d = jclass_language_density(m, e);
      total += d;
      if (!g.j_minimal(g.j[e])) {
        EXPECT_EQ(d, 0) << "element " << e;
      }
    }
    EXPECT_EQ(total, 1);
  }
}
