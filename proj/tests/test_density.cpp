#include <gtest/gtest.h>

#include <random>

#include "regmeasure/automata.hpp"
#include "regmeasure/checks.hpp"
#include "regmeasure/density.hpp"
#include "support.hpp"

using namespace regmeasure;
using testing_support::ab;

namespace {

Dfa length_mod(std::size_t k) {
  std::vector<bool> acc(k, false);
  acc[0] = true;
  std::vector<State> delta;
  for (std::size_t q = 0; q < k; ++q) delta.insert(delta.end(), 2, static_cast<State>((q + 1) % k));
  return Dfa(ab(), k, 0, acc, delta);
}

std::vector<Dfa> random_machines(std::uint64_t seed, std::size_t count, const Alphabet& a,
                                 std::size_t max_states) {
  std::mt19937_64 rng(seed);
  std::vector<Dfa> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_dfa(rng, a, max_states));
  return out;
}

}  // namespace

TEST(Density, Examples) {
  EXPECT_EQ(density(Dfa::empty(ab())), 0);
  EXPECT_EQ(density(Dfa::universal(ab())), 1);
  EXPECT_EQ(density(machines::even_length(ab())), Rational(1, 2));
  EXPECT_EQ(density(machines::starts_with(ab(), 'a')), Rational(1, 2));
  EXPECT_EQ(density(machines::ends_with(Alphabet("abc"), 'c')), Rational(1, 3));
  EXPECT_EQ(density(mod_counter_dfa(ab(), 3, 'a', 'b')), Rational(2, 3));
  EXPECT_EQ(density(machines::letter_star(ab(), 'a')), 0);
}

TEST(NaturalDensity, OscillatingEvens) {
  const DensityReport r = natural_density(machines::even_length(ab()));
  EXPECT_EQ(r.density, Rational(1, 2));
  EXPECT_FALSE(r.natural_density);
  EXPECT_EQ(r.modulus, 2u);
  ASSERT_EQ(r.accumulation_points.size(), 2u);
  EXPECT_EQ(r.accumulation_points[0], std::make_pair(std::size_t{0}, Rational(1)));
  EXPECT_EQ(r.accumulation_points[1], std::make_pair(std::size_t{1}, Rational(0)));
}

TEST(NaturalDensity, ConvergentCases) {
  const DensityReport s = natural_density(machines::starts_with(ab(), 'a'));
  ASSERT_TRUE(s.natural_density);
  EXPECT_EQ(*s.natural_density, Rational(1, 2));
  EXPECT_EQ(s.modulus, 1u);
  const DensityReport m = natural_density(length_mod(3));
  EXPECT_EQ(m.density, Rational(1, 3));
  EXPECT_EQ(m.modulus, 3u);
  EXPECT_FALSE(m.natural_density);
}

TEST(NaturalDensity, ModCounterOddAndEven) {
  // For odd k the counter walk is aperiodic on residues; for even k the
  // parity of |w| fixes the parity of |w|_a - |w|_b.
  EXPECT_TRUE(natural_density(mod_counter_dfa(ab(), 5, 'a', 'b')).natural_density);
  const DensityReport even = natural_density(mod_counter_dfa(ab(), 4, 'a', 'b'));
  EXPECT_FALSE(even.natural_density);
  EXPECT_EQ(even.density, Rational(3, 4));
  EXPECT_EQ(even.modulus, 2u);
}

TEST(Nullity, Examples) {
  EXPECT_TRUE(is_null(machines::letter_star(ab(), 'a')));
  EXPECT_FALSE(is_dense(machines::letter_star(ab(), 'a')));
  EXPECT_FALSE(is_null(machines::even_length(ab())));
  EXPECT_TRUE(is_dense(machines::even_length(ab())));
  EXPECT_TRUE(is_null(Dfa::empty(ab())));
}

TEST(DensityLaws, ComplementSumsToOne) {
  for (const Dfa& x : random_machines(101, 150, ab(), 6))
    EXPECT_EQ(density(x) + density(complement(x)), 1);
}

TEST(DensityLaws, MonotoneAndModular) {
  const auto xs = random_machines(103, 80, Alphabet("abc"), 5);
  for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
    const Dfa& x = xs[i];
    const Dfa& y = xs[i + 1];
    const Rational u = density(combine(x, y, BoolOp::union_));
    const Rational n = density(combine(x, y, BoolOp::intersection));
    EXPECT_LE(n, density(x));
    EXPECT_LE(density(x), u);
    EXPECT_EQ(u + n, density(x) + density(y));
  }
}

TEST(DensityLaws, InvariantUnderMinimizationAndRange) {
  for (const Dfa& x : random_machines(107, 100, ab(), 7)) {
    const Rational d = density(x);
    EXPECT_GE(d, 0);
    EXPECT_LE(d, 1);
    EXPECT_EQ(d, density(minimize(x)));
  }
}

TEST(DensityLaws, MatchesCesaroSimulation) {
  const Rational tolerance(1, 20);
  for (const Dfa& x : random_machines(109, 60, ab(), 6))
    EXPECT_LE(testing_support::abs(density(x) - testing_support::cesaro_by_simulation(x, 200)), tolerance);
}

TEST(DensityLaws, ResidueLimitsMatchSimulation) {
  const Rational tolerance(1, 1024);
  for (const Dfa& x : random_machines(113, 60, ab(), 6)) {
    const DensityReport r = natural_density(x);
    ASSERT_EQ(r.accumulation_points.size(), r.modulus);
    Rational mean = 0;
    for (const auto& [d, limit] : r.accumulation_points) {
      const std::size_t n = r.modulus * ((300 + r.modulus - 1) / r.modulus) + d;
      EXPECT_LE(testing_support::abs(limit - testing_support::ratio_by_simulation(x, n)), tolerance);
      mean += limit;
    }
    EXPECT_EQ(mean / Rational(static_cast<long>(r.modulus)), r.density);
    if (r.natural_density) {
      EXPECT_EQ(*r.natural_density, r.density);
    }
  }
}

TEST(DensityLaws, NullIffNotDense) {
  int null_count = 0;
  for (const Dfa& x : random_machines(127, 200, ab(), 6)) {
    EXPECT_EQ(is_null(x), !is_dense(x));
    EXPECT_EQ(is_null(x), density(x) == 0);
    null_count += is_null(x);
  }
  EXPECT_GT(null_count, 0);
}

TEST(ChainStructure, StationaryVectorsAreInvariant) {
  for (const Dfa& x : random_machines(131, 60, ab(), 6)) {
    const UniformChain chain(x);
    const ChainStructure s = analyze_chain(x);
    ASSERT_FALSE(s.classes.empty());
    for (const RecurrentClass& c : s.classes) {
      Rational total = 0;
      for (const auto& p : c.stationary) total += p;
      EXPECT_EQ(total, 1);
      for (std::size_t i = 0; i < c.states.size(); ++i) {
        Rational in = 0;
        for (std::size_t j = 0; j < c.states.size(); ++j)
          in += c.stationary[j] * chain.probability(c.states[j], c.states[i]);
        EXPECT_EQ(in, c.stationary[i]);
      }
      for (std::size_t i = 0; i < c.states.size(); ++i)
        for (std::size_t j = 0; j < c.states.size(); ++j)
          if (chain.counts().entry(c.states[i], c.states[j]) != 0) {
            EXPECT_EQ((c.cyclic_class[i] + 1) % c.period, c.cyclic_class[j]);
          }
    }
  }
}
