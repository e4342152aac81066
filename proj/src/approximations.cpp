#include "regmeasure/approximations.hpp"

#include <future>
#include <limits>
#include <stdexcept>

#include "regmeasure/density.hpp"
#include "regmeasure/monoid.hpp"

namespace regmeasure {

namespace {

void require_positive(std::size_t k, const char* what) {
  if (k == 0) throw std::invalid_argument(std::string(what) + ": parameter must be at least 1");
}

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t limit) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > limit / base) return limit + 1;
    out *= base;
  }
  return out;
}

// Σ_{j<n} base^j, saturating just above limit.
std::size_t geometric(std::size_t base, std::size_t n, std::size_t limit) {
  std::size_t total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    total += checked_power(base, j, limit);
    if (total > limit) return limit + 1;
  }
  return total;
}

}  // namespace

// ---------------------------------------------------------------------------
// Generators

Dfa modk_inner_dfa(std::size_t k) { return mod_counter_dfa(Alphabet("ab"), k, 'a', 'b'); }

Dfa modk_outer_dfa(std::size_t k) { return complement(modk_inner_dfa(k)); }

Dfa o3_outer_dfa(std::size_t k) {
  const Alphabet abc("abc");
  return minimize(combine(complement(mod_counter_dfa(abc, k, 'a', 'b')),
                          complement(mod_counter_dfa(abc, k, 'a', 'c')), BoolOp::union_));
}

Dfa o4_outer_dfa(std::size_t k) {
  const Alphabet xy("xXyY");
  return minimize(combine(complement(mod_counter_dfa(xy, k, 'x', 'X')),
                          complement(mod_counter_dfa(xy, k, 'y', 'Y')), BoolOp::union_));
}

Dfa pal_inner_dfa(const Alphabet& alphabet, std::size_t k, std::size_t state_budget) {
  require_positive(k, "pal_inner");
  const std::size_t q = alphabet.size();
  const std::size_t prefix_states = geometric(q, k, state_budget);
  const std::size_t words = checked_power(q, k, state_budget);
  const std::size_t window_states = geometric(q, k + 1, state_budget);
  if (prefix_states > state_budget || words > state_budget ||
      words * window_states > state_budget - std::min(prefix_states, state_budget))
    throw ResourceError("pal_inner(" + std::to_string(k) + ") exceeds the state budget of " +
                        std::to_string(state_budget));
  const std::size_t total = prefix_states + words * window_states;

  // Offsets of length-j blocks inside the prefix tree and inside a window tree.
  std::vector<std::size_t> offset(k + 1, 0);
  for (std::size_t j = 1; j <= k; ++j) offset[j] = offset[j - 1] + checked_power(q, j - 1, total);
  const auto prefix_id = [&](std::size_t j, std::size_t v) { return offset[j] + v; };
  const auto window_id = [&](std::size_t w1, std::size_t j, std::size_t v) {
    return prefix_states + w1 * window_states + offset[j] + v;
  };
  const auto reversed = [&](std::size_t v) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < k; ++i, v /= q) r = r * q + v % q;
    return r;
  };

  std::vector<State> delta(total * q);
  std::vector<bool> accepting(total, false);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t v = 0; v < checked_power(q, j, total); ++v)
      for (Letter a = 0; a < q; ++a) {
        const std::size_t nv = v * q + a;
        delta[prefix_id(j, v) * q + a] =
            static_cast<State>(j + 1 < k ? prefix_id(j + 1, nv) : window_id(nv, 0, 0));
      }
  for (std::size_t w1 = 0; w1 < words; ++w1) {
    const std::size_t rev = reversed(w1);
    for (std::size_t j = 0; j <= k; ++j)
      for (std::size_t v = 0; v < checked_power(q, j, total); ++v) {
        const std::size_t id = window_id(w1, j, v);
        if (j == k) accepting[id] = v != rev;
        for (Letter a = 0; a < q; ++a)
          delta[id * q + a] = static_cast<State>(
              j < k ? window_id(w1, j + 1, v * q + a) : window_id(w1, k, (v * q + a) % words));
      }
  }
  return minimize(Dfa(alphabet, total, 0, std::move(accepting), std::move(delta)));
}

Dfa goldstine_inner_dfa(std::size_t k) {
  require_positive(k, "goldstine_inner");
  const Word pi = goldstine_word().prefix(k);
  // States: 0..k-1 still matching pi; k..2k-1 deviated after reading (state-k+1)
  // letters; 2k tail (last letter not b); 2k+1 tail (last letter b); 2k+2 dead.
  const State tail = static_cast<State>(2 * k);
  const State tail_b = tail + 1;
  const State dead = tail + 2;
  const auto deviated = [&](std::size_t read) { return read == k ? tail : static_cast<State>(k + read - 1); };
  std::vector<State> delta((2 * k + 3) * 2);
  for (std::size_t i = 0; i < k; ++i)
    for (Letter a = 0; a < 2; ++a)
      delta[i * 2 + a] = a == pi[i] ? (i + 1 < k ? static_cast<State>(i + 1) : dead) : deviated(i + 1);
  for (std::size_t read = 1; read < k; ++read)
    for (Letter a = 0; a < 2; ++a) delta[deviated(read) * 2 + a] = deviated(read + 1);
  for (State s : {tail, tail_b}) {
    delta[s * 2 + 0] = tail;
    delta[s * 2 + 1] = tail_b;
  }
  delta[dead * 2 + 0] = delta[dead * 2 + 1] = dead;
  std::vector<bool> accepting(2 * k + 3, false);
  accepting[tail_b] = true;
  return minimize(Dfa(Alphabet("ab"), 2 * k + 3, 0, std::move(accepting), std::move(delta)));
}

Dfa goldstine_outer_dfa() { return machines::ends_with(Alphabet("ab"), 'b'); }

namespace {

// Trie over A^{<n} followed by the first c. `member` decides each trie word.
Dfa extension_trie(const Alphabet& base, char c, std::size_t n, Direction direction,
                   const std::function<bool(const Word&)>& member, std::size_t state_budget) {
  const Alphabet wide(base.symbols() + c);
  const std::size_t q = base.size();
  const std::size_t width = wide.size();
  const std::size_t nodes = geometric(q, n, state_budget);
  if (nodes + 2 > state_budget)
    throw ResourceError("extension automaton for n=" + std::to_string(n) +
                        " exceeds the state budget of " + std::to_string(state_budget));
  const auto accept = static_cast<State>(nodes);
  const auto reject = static_cast<State>(nodes + 1);
  const bool outer = direction == Direction::outer;

  std::vector<State> delta((nodes + 2) * width);
  std::vector<bool> accepting(nodes + 2, outer);
  accepting[accept] = true;
  accepting[reject] = false;
  for (Letter a = 0; a < width; ++a) {
    delta[accept * width + a] = accept;
    delta[reject * width + a] = reject;
  }
  // Shortlex enumeration visits trie nodes in index order: length blocks, then
  // lexicographic value inside a block.
  std::size_t id = 0, block_start = 0, block_len = 0, block_size = 1;
  for_each_word_upto(q, n == 0 ? 0 : n - 1, [&](const Word& u) {
    if (n == 0) return false;
    if (u.size() != block_len) {
      block_start += block_size;
      block_size *= q;
      block_len = u.size();
    }
    const std::size_t value = id - block_start;
    for (Letter a = 0; a < q; ++a) {
      const bool last = u.size() + 1 >= n;
      delta[id * width + a] =
          last ? (outer ? accept : reject)
               : static_cast<State>(block_start + block_size + value * q + a);
    }
    delta[id * width + q] = member(u) ? accept : reject;
    ++id;
    return true;
  });
  if (n == 0) {
    // No trie: nothing is decided, so inner is ∅ and outer is B*.
    return outer ? Dfa::universal(wide) : Dfa::empty(wide);
  }
  return minimize(Dfa(wide, nodes + 2, 0, std::move(accepting), std::move(delta)));
}

}  // namespace

Dfa suffix_ext_dfa(const LanguageOracle& base, char c, std::size_t n, Direction direction,
                   std::size_t state_budget) {
  return extension_trie(base.alphabet, c, n, direction, base.member, state_budget);
}

Dfa prefix_ext_dfa(const LanguageOracle& base, char c, std::size_t n, Direction direction,
                   std::size_t state_budget) {
  const auto member = base.member;
  return reverse(extension_trie(base.alphabet, c, n, direction,
                                [&](const Word& u) { return member(u.reversed()); },
                                state_budget));
}

Dfa infix_ext_inner_dfa(const LanguageOracle& base, char c, std::size_t n) {
  const Alphabet wide(base.alphabet.symbols() + c);
  std::optional<Word> found;
  if (n > 0)
    for_each_word_upto(base.alphabet.size(), n - 1, [&](const Word& u) {
      if (!base.contains(u)) return true;
      found = u;
      return false;
    });
  if (!found) return Dfa::empty(wide);
  const Letter lc = wide.index_of(c);
  Word factor({lc});
  factor += *found;
  factor.push_back(lc);
  return minimize(machines::contains_factor(wide, factor));
}

// ---------------------------------------------------------------------------
// Families

namespace families {

namespace {

using Claim = std::function<std::optional<Rational>(std::size_t)>;

Claim odd_claim(std::function<Rational(std::size_t)> formula) {
  return [formula](std::size_t k) -> std::optional<Rational> {
    if (k % 2 == 0) return std::nullopt;
    return formula(k);
  };
}

// Σ_{m<n} weight(m)·|B|^{-(m+1)} with weight from an exact count per length.
Rational extension_mass(std::size_t width, std::size_t n,
                        const std::function<BigCount(std::size_t)>& count) {
  Rational total = 0;
  for (std::size_t m = 0; m < n; ++m) total += Rational(count(m), power_of(width, m + 1));
  return total;
}

std::function<BigCount(std::size_t)> base_counts(const LanguageOracle& base) {
  if (base.has_counter()) return base.counter;
  const Alphabet alphabet = base.alphabet;
  const auto member = base.member;
  return [alphabet, member](std::size_t m) {
    BigCount total = 0;
    for_each_word(alphabet.size(), m, [&](const Word& w) {
      if (member(w)) ++total;
    });
    return total;
  };
}

ApproxFamily extension_family(std::string name, LanguageOracle target, const LanguageOracle& base,
                              std::function<Dfa(std::size_t)> inner,
                              std::function<Dfa(std::size_t)> outer) {
  const std::size_t q = base.alphabet.size();
  const std::size_t width = q + 1;
  const auto counts = base_counts(base);
  ApproxFamily f{std::move(name), std::move(target), std::move(inner), std::move(outer), {}, {}};
  f.claimed_inner = [=](std::size_t n) -> std::optional<Rational> {
    return extension_mass(width, n, counts);
  };
  f.claimed_outer = [=](std::size_t n) -> std::optional<Rational> {
    return 1 - extension_mass(width, n, [&](std::size_t m) { return power_of(q, m) - counts(m); });
  };
  return f;
}

}  // namespace

ApproxFamily modk() {
  ApproxFamily f{"modk", oracles::count_eq(Alphabet("ab"), 'a', 'b'), {}, modk_outer_dfa, {}, {}};
  f.claimed_outer = odd_claim([](std::size_t k) { return Rational(1, static_cast<long>(k)); });
  return f;
}

ApproxFamily modk_inner() {
  ApproxFamily f{"modk-inner", oracles::complement(oracles::count_eq(Alphabet("ab"), 'a', 'b')),
                 modk_inner_dfa, {}, {}, {}};
  f.claimed_inner =
      odd_claim([](std::size_t k) { return Rational(static_cast<long>(k) - 1, static_cast<long>(k)); });
  return f;
}

ApproxFamily o3() { return {"o3", oracles::o3(), {}, o3_outer_dfa, {}, {}}; }

ApproxFamily o4() { return {"o4", oracles::o4(), {}, o4_outer_dfa, {}, {}}; }

ApproxFamily pal(const Alphabet& alphabet) {
  ApproxFamily f{"pal", oracles::complement(oracles::palindromes(alphabet)),
                 [alphabet](std::size_t k) { return pal_inner_dfa(alphabet, k); }, {}, {}, {}};
  const std::size_t q = alphabet.size();
  f.claimed_inner = [q](std::size_t k) -> std::optional<Rational> {
    return 1 - Rational(BigInt(1), power_of(q, k));
  };
  return f;
}

ApproxFamily goldstine() {
  ApproxFamily f{"goldstine", oracles::goldstine(), goldstine_inner_dfa,
                 [](std::size_t) { return goldstine_outer_dfa(); }, {}, {}};
  f.claimed_inner = [](std::size_t k) -> std::optional<Rational> {
    return Rational(1, 2) - Rational(BigInt(1), power_of(2, k + 1));
  };
  f.claimed_outer = [](std::size_t) -> std::optional<Rational> { return Rational(1, 2); };
  return f;
}

ApproxFamily suffix_ext(const LanguageOracle& base, char c) {
  return extension_family(
      "suffix-ext:" + base.name + ":" + c, oracles::suffix_extension(base, c), base,
      [base, c](std::size_t n) { return suffix_ext_dfa(base, c, n, Direction::inner); },
      [base, c](std::size_t n) { return suffix_ext_dfa(base, c, n, Direction::outer); });
}

ApproxFamily prefix_ext(const LanguageOracle& base, char c) {
  return extension_family(
      "prefix-ext:" + base.name + ":" + c, oracles::prefix_extension(base, c), base,
      [base, c](std::size_t n) { return prefix_ext_dfa(base, c, n, Direction::inner); },
      [base, c](std::size_t n) { return prefix_ext_dfa(base, c, n, Direction::outer); });
}

ApproxFamily infix_ext(const LanguageOracle& base, char c) {
  ApproxFamily f{"infix-ext:" + base.name + ":" + c, oracles::infix_extension(base, c),
                 [base, c](std::size_t n) { return infix_ext_inner_dfa(base, c, n); }, {}, {}, {}};
  return f;
}

}  // namespace families

ApproxFamily parse_family(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view head = spec.substr(0, colon);
  const bool has_rest = colon != std::string_view::npos;
  const std::string_view rest = has_rest ? spec.substr(colon + 1) : "";
  if (!has_rest) {
    if (head == "modk") return families::modk();
    if (head == "modk-inner") return families::modk_inner();
    if (head == "o3") return families::o3();
    if (head == "o4") return families::o4();
    if (head == "pal") return families::pal(Alphabet("ab"));
    if (head == "goldstine") return families::goldstine();
  } else {
    if (head == "pal") return families::pal(Alphabet(rest));
    if (head == "suffix-ext" || head == "prefix-ext" || head == "infix-ext") {
      const auto last = rest.rfind(':');
      if (last == std::string_view::npos || last == 0 || last + 2 != rest.size())
        throw std::invalid_argument(std::string(head) + " expects <base>:<letter>");
      const LanguageOracle base = parse_oracle(rest.substr(0, last));
      const char c = rest.back();
      if (head == "suffix-ext") return families::suffix_ext(base, c);
      if (head == "prefix-ext") return families::prefix_ext(base, c);
      return families::infix_ext(base, c);
    }
  }
  throw std::invalid_argument("unknown family '" + std::string(spec) + "'");
}

// ---------------------------------------------------------------------------
// Verification and reports

std::optional<Word> verify_containment(const Dfa& x, const LanguageOracle& target,
                                       Direction direction, std::size_t max_length,
                                       std::uint64_t budget) {
  if (!(x.alphabet() == target.alphabet))
    throw AlphabetMismatch("automaton and oracle '" + target.name + "' use different alphabets");
  check_enumeration_budget(target.alphabet.size(), max_length, budget);
  std::optional<Word> counterexample;
  for_each_word_upto(target.alphabet.size(), max_length, [&](const Word& w) {
    const bool in_x = x.accepts(w);
    const bool bad = direction == Direction::inner ? in_x && !target.contains(w)
                                                   : !in_x && target.contains(w);
    if (bad) counterexample = w;
    return !bad;
  });
  return counterexample;
}

GapReport gap_report(const ApproxFamily& family, const std::vector<std::size_t>& ks,
                     std::size_t max_length, std::uint64_t budget) {
  const std::size_t q = family.target.alphabet.size();
  check_enumeration_budget(q, max_length, budget);
  std::vector<std::future<GapRow>> work;
  for (std::size_t k : ks) {
    work.push_back(std::async(std::launch::async, [&family, k, max_length, budget] {
      GapRow row;
      row.k = k;
      row.inner = 0;
      row.outer = 1;
      if (family.has_inner()) {
        const Dfa in = family.inner(k);
        row.has_inner = true;
        row.inner = density(in);
        row.inner_counterexample =
            verify_containment(in, family.target, Direction::inner, max_length, budget);
      }
      if (family.has_outer()) {
        const Dfa out = family.outer(k);
        row.has_outer = true;
        row.outer = density(out);
        row.outer_counterexample =
            verify_containment(out, family.target, Direction::outer, max_length, budget);
      }
      if (family.claimed_inner) row.claimed_inner = family.claimed_inner(k);
      if (family.claimed_outer) row.claimed_outer = family.claimed_outer(k);
      row.gap = row.outer - row.inner;
      return row;
    }));
  }
  GapReport report;
  report.family = family.name;
  report.max_length = max_length;
  for (auto& w : work) report.rows.push_back(w.get());
  report.target_prefix = ratio_and_cesaro(family.target.has_counter()
                                              ? closed_counts(family.target, max_length)
                                              : census_by_enumeration(family.target, max_length, budget));
  return report;
}

Word majority_escape_witness(const Dfa& x, std::size_t m) {
  require_positive(m, "majority_escape_witness");
  if (!(x.alphabet() == Alphabet("ab")))
    throw AlphabetMismatch("majority escape witness needs an automaton over {a,b}");
  if (density(x) == 0) throw NullLanguage();
  const Dfa d = minimize(x);
  const std::size_t c = transition_monoid(d).monoid.max_witness_length();
  const std::size_t n = d.state_count();
  constexpr Letter a = 0, b = 1;

  // Shortlex-least words reaching each state.
  std::vector<std::optional<Word>> reach(n);
  reach[d.initial()] = Word();
  std::vector<State> queue{d.initial()};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Letter l : {a, b}) {
      const State t = d.next(queue[i], l);
      if (reach[t]) continue;
      reach[t] = *reach[queue[i]] + Word({l});
      queue.push_back(t);
    }

  // Distance to acceptance, by backward BFS.
  constexpr std::size_t far = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n, far);
  std::vector<State> frontier;
  for (State s = 0; s < n; ++s)
    if (d.is_accepting(s)) {
      dist[s] = 0;
      frontier.push_back(s);
    }
  for (std::size_t step = 1; !frontier.empty(); ++step) {
    std::vector<State> next;
    for (State s = 0; s < n; ++s)
      if (dist[s] == far)
        for (Letter l : {a, b})
          if (dist[d.next(s, l)] == step - 1) {
            dist[s] = step;
            next.push_back(s);
            break;
          }
    frontier = std::move(next);
  }
  const auto finish = [&](State s) {
    Word y;
    while (dist[s] > 0) {
      const Letter l = dist[d.next(s, a)] + 1 == dist[s] ? a : b;
      y.push_back(l);
      s = d.next(s, l);
    }
    return y;
  };

  const Word block = Word({b}).power(2 * c);
  std::optional<Word> best;
  for (State r : queue) {
    const State s = d.run(block, r);
    if (dist[s] == far) continue;
    Word v = *reach[r] + block + finish(s);
    if (!best || v < *best) best = std::move(v);
  }
  if (!best || !x.accepts(*best) || best->count(a) > m * best->count(b))
    throw std::logic_error("escape witness construction failed on a non-null language");
  return *best;
}

}  // namespace regmeasure
