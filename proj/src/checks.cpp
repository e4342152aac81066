#include "regmeasure/checks.hpp"

#include <chrono>
#include <stdexcept>

#include "regmeasure/approximations.hpp"
#include "regmeasure/density.hpp"
#include "regmeasure/languages.hpp"
#include "regmeasure/monoid.hpp"

namespace regmeasure {

Dfa random_dfa(std::mt19937_64& rng, const Alphabet& alphabet, std::size_t max_states) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_states)(rng);
  std::uniform_int_distribution<State> target(0, static_cast<State>(n - 1));
  std::vector<State> delta(n * alphabet.size());
  for (auto& t : delta) t = target(rng);
  std::vector<bool> accepting(n);
  for (std::size_t q = 0; q < n; ++q) accepting[q] = rng() % 2 == 1;
  return Dfa(alphabet, n, 0, std::move(accepting), std::move(delta));
}

CheckOptions::CheckOptions() : density([](const Dfa& x) { return regmeasure::density(x); }) {}

namespace {

// Collects failed sub-claims for one criterion.
class Verdict {
 public:
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (!ok) failures_.push_back(what);
  }
  bool passed() const { return failures_.empty(); }
  std::string detail() const {
    if (passed()) return std::to_string(checked_) + " claims verified";
    std::string out;
    for (const auto& f : failures_) out += (out.empty() ? "" : "; ") + f;
    return out;
  }

 private:
  std::size_t checked_ = 0;
  std::vector<std::string> failures_;
};

std::string show(const Rational& r) { return to_string(r); }

const Alphabet kAB("ab");

// Non-null random DFAs over {a,b}, drawn in sequence from a seeded generator.
std::vector<Dfa> random_by_nullity(std::uint64_t seed, std::size_t count, bool null,
                                   std::size_t max_states) {
  std::mt19937_64 rng(seed);
  std::vector<Dfa> out;
  for (std::size_t tries = 0; out.size() < count; ++tries) {
    if (tries > 100'000) throw std::logic_error("random DFA search did not converge");
    Dfa x = random_dfa(rng, kAB, max_states);
    if ((density(x) == 0) == null) out.push_back(std::move(x));
  }
  return out;
}

// ---------------------------------------------------------------------------

void textbook(const CheckOptions& o, Verdict& v) {
  const Rational a2 = o.density(machines::starts_with(kAB, 'a'));
  v.expect(a2 == Rational(1, 2), "density({a}A*) over |A|=2 is " + show(a2));
  const Rational a3 = o.density(machines::starts_with(Alphabet("abc"), 'a'));
  v.expect(a3 == Rational(1, 3), "density({a}A*) over |A|=3 is " + show(a3));
  const Dfa evens = machines::even_length(kAB);
  const Rational e = o.density(evens);
  v.expect(e == Rational(1, 2), "density((AA)*) is " + show(e));
  const DensityReport r = natural_density(evens);
  v.expect(!r.natural_density, "(AA)* reports a natural density");
  const bool points = r.accumulation_points.size() == 2 &&
                      r.accumulation_points[0] == std::pair<std::size_t, Rational>{0, 1} &&
                      r.accumulation_points[1] == std::pair<std::size_t, Rational>{1, 0};
  v.expect(points, "(AA)* accumulation points differ from {0:1, 1:0}");
}

void modk(const CheckOptions& o, Verdict& v) {
  const LanguageOracle target = oracles::complement(oracles::count_eq(kAB, 'a', 'b'));
  for (std::size_t k : {3, 5, 7, 9}) {
    const Dfa a = modk_inner_dfa(k);
    const Rational d = o.density(a);
    const Rational want(static_cast<long>(k) - 1, static_cast<long>(k));
    v.expect(d == want, "density(A_" + std::to_string(k) + ") is " + show(d));
    const auto bad = verify_containment(a, target, Direction::inner, 12);
    v.expect(!bad, "A_" + std::to_string(k) + " accepts " +
                       (bad ? render_word(kAB, *bad) : std::string()) + " with |w|_a = |w|_b");
  }
}

void dyck(const CheckOptions&, Verdict& v) {
  const LengthCensus census = census_by_enumeration(oracles::semi_dyck(), 20);
  for (unsigned n = 0; n <= 10; ++n) {
    v.expect(census.counts[2 * n] == catalan(n),
             "|D ∩ A^" + std::to_string(2 * n) + "| = " + to_string(census.counts[2 * n]));
    if (n < 10)
      v.expect(census.counts[2 * n + 1] == 0, "odd length " + std::to_string(2 * n + 1) + " non-empty");
  }
  const Rational c = ratio_and_cesaro(census).cesaro[20];
  v.expect(c <= Rational(1, 10), "Cesàro mean at N=20 is " + show(c));
}

void pal(const CheckOptions& o, Verdict& v) {
  const LanguageOracle target = oracles::complement(oracles::palindromes(kAB));
  for (std::size_t k = 1; k <= 6; ++k) {
    const Dfa x = pal_inner_dfa(kAB, k);
    const Rational d = o.density(x);
    v.expect(d == 1 - Rational(BigInt(1), power_of(2, k)),
             "density(pal_inner(" + std::to_string(k) + ")) is " + show(d));
    const auto bad = verify_containment(x, target, Direction::inner, 14);
    v.expect(!bad, "pal_inner(" + std::to_string(k) + ") accepts palindrome " +
                       (bad ? render_word(kAB, *bad) : std::string()));
  }
}

void goldstine(const CheckOptions& o, Verdict& v) {
  const LanguageOracle g = oracles::goldstine();
  for (std::size_t k = 1; k <= 10; ++k) {
    const Dfa x = goldstine_inner_dfa(k);
    const Rational d = o.density(x);
    v.expect(d == Rational(1, 2) - Rational(BigInt(1), power_of(2, k + 1)),
             "density(goldstine_inner(" + std::to_string(k) + ")) is " + show(d));
    const auto bad = verify_containment(x, g, Direction::inner, 16);
    v.expect(!bad, "goldstine_inner(" + std::to_string(k) + ") accepts " +
                       (bad ? render_word(kAB, *bad) : std::string()) + " outside G");
  }
  const auto bad = verify_containment(goldstine_outer_dfa(), g, Direction::outer, 16);
  v.expect(!bad, "G contains " + (bad ? render_word(kAB, *bad) : std::string()) + " outside A*b");
  const LanguageOracle copref = oracles::coprefix(goldstine_word());
  const Dfa ends_b = machines::ends_with(kAB, 'b');
  bool agree = true;
  for_each_word_upto(2, 12, [&](const Word& w) {
    agree = g.contains(w) == (copref.contains(w) && ends_b.accepts(w));
    return agree;
  });
  v.expect(agree, "G differs from Copref(a b a² b …) ∩ A*b below length 13");
}

void o3o4(const CheckOptions& o, Verdict& v) {
  const LanguageOracle o3 = oracles::o3();
  const LanguageOracle o4 = oracles::o4();
  for (std::size_t k : {3, 5, 9}) {
    const Rational bound(2, static_cast<long>(k));
    const Dfa x3 = o3_outer_dfa(k);
    const Dfa x4 = o4_outer_dfa(k);
    const Rational d3 = o.density(x3), d4 = o.density(x4);
    v.expect(d3 <= bound, "O3 outer density for k=" + std::to_string(k) + " is " + show(d3));
    v.expect(d4 <= bound, "O4 outer density for k=" + std::to_string(k) + " is " + show(d4));
    v.expect(!verify_containment(x3, o3, Direction::outer, 8), "O3 ⊄ outer(" + std::to_string(k) + ")");
    v.expect(!verify_containment(x4, o4, Direction::outer, 6), "O4 ⊄ outer(" + std::to_string(k) + ")");
  }
  const LengthCensus brute = census_by_enumeration(o3, 12);
  for (std::size_t n = 0; n <= 12; ++n)
    v.expect(brute.counts[n] == closed_count(o3, n), "O3 closed count wrong at n=" + std::to_string(n));
  const Rational r18(closed_count(o3, 18), power_of(3, 18));
  v.expect(r18 < Rational(1, 10), "O3 ratio at n=18 is " + show(r18) + ", not below 1/10");
}

void suffix(const CheckOptions& o, Verdict& v) {
  const LanguageOracle astar = oracles::letter_star();
  for (std::size_t n = 1; n <= 10; ++n) {
    const Rational d = o.density(suffix_ext_dfa(astar, 'c', n, Direction::inner));
    v.expect(d == 1 - Rational(BigInt(1), power_of(2, n)),
             "a*-extension inner density at n=" + std::to_string(n) + " is " + show(d));
  }
  const LanguageOracle base = oracles::kemp_base();
  std::optional<Dfa> prev_in, prev_out;
  Rational prev_inner = 0, prev_outer = 1;
  for (std::size_t n = 1; n <= 12; ++n) {
    const Dfa in = suffix_ext_dfa(base, 'c', n, Direction::inner);
    const Dfa out = suffix_ext_dfa(base, 'c', n, Direction::outer);
    const Rational di = o.density(in), dout = o.density(out);
    const std::string at = " at n=" + std::to_string(n);
    v.expect(di >= prev_inner && dout <= prev_outer, "Kemp densities not monotone" + at);
    if (prev_in) {
      v.expect(is_subset(*prev_in, in), "Kemp inner sequence not increasing" + at);
      v.expect(is_subset(out, *prev_out), "Kemp outer sequence not decreasing" + at);
    }
    // Σ_{m≥n} 2^m 3^{-(m+1)} = (2/3)^n
    const Rational tail(power_of(2, n), power_of(3, n));
    v.expect(dout - di == tail, "Kemp gap" + at + " is " + show(dout - di));
    if (n == 12) v.expect(dout - di < Rational(1, 100), "Kemp gap at n=12 is " + show(dout - di));
    prev_in = in;
    prev_out = out;
    prev_inner = di;
    prev_outer = dout;
  }
}

void majority(const CheckOptions& o, Verdict& v) {
  const LanguageOracle m1 = oracles::majority(1);
  const LengthCensus brute = census_by_enumeration(m1, 16);
  for (unsigned n = 0; n <= 16; ++n) {
    const BigCount central = n % 2 == 0 ? binomial(n, n / 2) : BigInt(0);
    const BigCount want = (power_of(2, n) - central) / 2;
    v.expect(brute.counts[n] == want, "|M_1 ∩ A^" + std::to_string(n) + "| = " + to_string(brute.counts[n]));
    v.expect(closed_count(m1, n) == want, "M_1 counter wrong at n=" + std::to_string(n));
  }
  const Rational r20(closed_count(m1, 20), power_of(2, 20));
  const Rational want20 = (1 - Rational(binomial(20, 10), power_of(2, 20))) / 2;
  v.expect(r20 == want20, "M_1 ratio at n=20 is " + show(r20));
  v.expect(r20 > Rational(2, 5) && r20 < Rational(1, 2), "M_1 ratio at n=20 outside (2/5, 1/2)");
  const Rational r24(closed_count(oracles::majority(2), 24), power_of(2, 24));
  v.expect(r24 <= Rational(1, 50), "M_2 ratio at n=24 is " + show(r24) + ", above 1/50");

  for (const Dfa& x : random_by_nullity(o.seed, 10, false, 6)) {
    for (std::size_t m : {1, 2}) {
      const Word w = majority_escape_witness(x, m);
      const std::size_t c = transition_monoid(x).monoid.max_witness_length();
      v.expect(x.accepts(w) && w.count(0) <= m * w.count(1) && w.size() <= 4 * c,
               "escape witness " + render_word(kAB, w) + " invalid");
    }
  }
  for (const Dfa& x : random_by_nullity(o.seed + 1, 5, true, 6)) {
    bool raised = false;
    try {
      majority_escape_witness(x, 1);
    } catch (const NullLanguage&) {
      raised = true;
    }
    v.expect(raised, "escape witness returned for a null DFA");
  }
}

bool letter_power(const Word& w) {
  for (Letter l : w.letters)
    if (l != w[0]) return false;
  return true;
}

void prim(const CheckOptions& o, Verdict& v) {
  const LanguageOracle q = oracles::primitive(kAB);
  const LengthCensus brute = census_by_enumeration(q, 16);
  for (std::size_t n = 0; n <= 16; ++n)
    v.expect(brute.counts[n] == closed_count(q, n), "primitive count wrong at n=" + std::to_string(n));
  for (std::size_t n = 4; n <= 16; ++n) {
    // ratio ≥ 1 - 2√n·2^{1-n/2}  ⇔  (1 - ratio)^2 ≤ 4n·2^{2-n}
    const Rational miss = 1 - Rational(brute.counts[n], power_of(2, n));
    const Rational bound = Rational(BigInt(4 * n) * 4, power_of(2, n));
    v.expect(miss * miss <= bound, "divisor bound fails at n=" + std::to_string(n));
  }

  std::vector<Dfa> inputs = random_by_nullity(o.seed + 2, 10, false, 6);
  inputs.push_back(modk_inner_dfa(3));
  for (const Dfa& x : inputs) {
    const NonprimitiveWitness w = nonprimitive_witness(x);
    bool ok = !w.word.empty();
    for (std::size_t m = 1; m <= 3 && ok; ++m) {
      const Word p = w.word.power(m * w.n + 1);
      ok = x.accepts(p) && !is_primitive(p);
    }
    v.expect(ok, "non-primitive witness " + render_word(kAB, w.word) + " invalid");
  }
  const NonprimitiveWitness a3 = nonprimitive_witness(modk_inner_dfa(3));
  v.expect(a3.word == Word({0}) && a3.n == 3, "A_3 witness is not (a, 3)");

  bool identity = true;
  for_each_word_upto(2, 10, [&](const Word& w) {
    if (w.empty()) return true;
    bool product = false;
    for (std::size_t i = 1; i < w.size() && !product; ++i)
      product = is_primitive(w.prefix(i)) && is_primitive(w.suffix_from(i));
    const bool excluded = letter_power(w) && w.size() != 2;
    identity = product == !excluded;
    return identity;
  });
  v.expect(identity, "Q² differs from A⁺ minus letter powers of length ≠ 2");
}

void algebra(const CheckOptions& o, Verdict& v) {
  std::mt19937_64 rng(o.seed + 3);
  for (int i = 0; i < 200; ++i) {
    const Dfa x = random_dfa(rng, kAB, 8);
    const Dfa y = random_dfa(rng, kAB, 8);
    const Rational dx = o.density(x);
    const std::string tag = " (sample " + std::to_string(i) + ")";
    v.expect(dx + o.density(complement(x)) == 1, "complement law fails" + tag);
    const Dfa both = combine(x, y, BoolOp::union_);
    v.expect(dx <= o.density(both), "monotonicity fails for x ⊆ x ∪ y" + tag);
    if (is_subset(x, y)) v.expect(dx <= o.density(y), "monotonicity fails" + tag);
    const Dfa rest = combine(y, x, BoolOp::difference);
    v.expect(o.density(combine(x, rest, BoolOp::union_)) == dx + o.density(rest),
             "disjoint additivity fails" + tag);
    v.expect((dx == 0) == shortest_forbidden_word(x).has_value(), "null ⇔ not dense fails" + tag);
  }
}

void diagonal(const CheckOptions&, Verdict& v) {
  const DiagonalLanguage lang(kAB);
  for (std::size_t n = 0; n <= 5; ++n) {
    std::size_t accepted = 0;
    for_each_word(2, n, [&](const Word& w) {
      if (lang.contains(w)) ++accepted;
    });
    v.expect(accepted <= 1, std::to_string(accepted) + " accepted words of length " + std::to_string(n));
  }
  const auto steps = lang.steps(6);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i > 0)
      v.expect(steps[i].word.size() > steps[i - 1].word.size(), "accepted lengths not increasing");
    v.expect(!pinned_dfa(kAB, steps[i].machine).accepts(steps[i].word),
             "committed word accepted by its automaton");
  }
}

Criterion make(int id, std::string tag, std::string title, void (*body)(const CheckOptions&, Verdict&)) {
  return {id, tag, title, [id, tag, title, body](const CheckOptions& o) {
            const auto start = std::chrono::steady_clock::now();
            Verdict v;
            CheckResult r{id, tag, title, false, {}, 0};
            try {
              body(o, v);
              r.passed = v.passed();
              r.detail = v.detail();
            } catch (const std::exception& e) {
              r.detail = std::string("error: ") + e.what();
            }
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return r;
          }};
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      make(1, "textbook", "exact densities of textbook machines", textbook),
      make(2, "modk", "mod-k counters: density (k-1)/k and containment", modk),
      make(3, "dyck", "semi-Dyck census and null Cesàro prefix", dyck),
      make(4, "pal", "palindrome family densities and containment", pal),
      make(5, "goldstine", "Goldstine family and coprefix identity", goldstine),
      make(6, "o3o4", "O3/O4 outer densities and O3 census", o3o4),
      make(7, "suffix", "suffix extension densities and Kemp gaps", suffix),
      make(8, "majority", "majority counts and escape witnesses", majority),
      make(9, "prim", "primitive words, witnesses, and Q² identity", prim),
      make(10, "algebra", "density algebra on random automata", algebra),
      make(11, "diagonal", "diagonal null language", diagonal),
  };
  return all;
}

std::vector<CheckResult> run_checks(const CheckOptions& options, std::string_view only) {
  std::vector<CheckResult> out;
  for (const auto& c : criteria())
    if (only.empty() || only == c.tag || only == std::to_string(c.id)) out.push_back(c.run(options));
  if (out.empty()) throw std::invalid_argument("no criterion matches '" + std::string(only) + "'");
  return out;
}

}  // namespace regmeasure
