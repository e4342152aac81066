#include "regmeasure/languages.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <utility>

namespace regmeasure {

LengthCensus census_by_enumeration(const LanguageOracle& oracle, std::size_t max_length,
                                   std::uint64_t budget) {
  return census_by_enumeration(oracle.alphabet, oracle.member, max_length, budget);
}

BigCount closed_count(const LanguageOracle& oracle, std::size_t n) {
  if (!oracle.has_counter())
    throw std::invalid_argument("oracle '" + oracle.name + "' has no closed-form counter");
  return oracle.counter(n);
}

LengthCensus closed_counts(const LanguageOracle& oracle, std::size_t max_length) {
  LengthCensus census;
  census.alphabet_size = oracle.alphabet.size();
  for (std::size_t n = 0; n <= max_length; ++n) census.counts.push_back(closed_count(oracle, n));
  return census;
}

// ---------------------------------------------------------------------------
// Numbers and words

int moebius(std::size_t n) {
  if (n == 0) throw std::invalid_argument("moebius(0) is undefined");
  int sign = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

BigInt catalan(unsigned n) { return binomial(2 * n, n) / (n + 1); }

bool is_primitive(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) return false;
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = w[i] == w[i - d];
    if (periodic) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Morphisms and infinite words

Morphism Morphism::parse(std::string_view spec) {
  std::string heads;
  std::vector<std::string> bodies;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t end = std::min(spec.find(',', start), spec.size());
    const std::string_view rule = spec.substr(start, end - start);
    if (rule.size() < 2 || rule[1] != '=')
      throw std::invalid_argument("morphism rule '" + std::string(rule) + "' is not of the form x=word");
    heads.push_back(rule[0]);
    bodies.emplace_back(rule.substr(2));
    start = end + 1;
  }
  Morphism h{Alphabet(heads), {}};
  for (const auto& body : bodies) {
    try {
      h.images.push_back(parse_word(h.alphabet, body));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("morphism image '" + body + "' uses a letter without a rule");
    }
  }
  return h;
}

Word Morphism::apply(const Word& w) const {
  Word out;
  for (Letter a : w.letters) out += images.at(a);
  return out;
}

namespace {

struct PrefixCache {
  std::mutex mutex;
  Word known;
};

}  // namespace

InfiniteWord fixed_point(const Morphism& h, char seed) {
  const Letter s = h.alphabet.index_of(seed);
  const Word& image = h.images.at(s);
  if (image.size() < 2 || image[0] != s)
    throw std::invalid_argument(std::string("morphism is not prolongable on '") + seed + "'");
  auto cache = std::make_shared<PrefixCache>();
  cache->known = Word({s});
  InfiniteWord out{h.alphabet, std::string("h^w(") + seed + ")", {}};
  out.prefix = [h, cache](std::size_t n) {
    std::lock_guard lock(cache->mutex);
    while (cache->known.size() < n) {
      Word next = h.apply(cache->known);
      if (next.size() <= cache->known.size())
        throw std::invalid_argument("morphism iteration does not produce an infinite word");
      cache->known = std::move(next);
    }
    return cache->known.prefix(n);
  };
  // Fail early on erasing morphisms that stall immediately.
  out.prefix(image.size() + 1);
  return out;
}

InfiniteWord goldstine_word() {
  InfiniteWord out{Alphabet("ab"), "a^1 b a^2 b a^3 b ...", {}};
  out.prefix = [](std::size_t n) {
    Word w;
    for (std::size_t block = 1; w.size() < n; ++block) {
      for (std::size_t i = 0; i < block && w.size() < n; ++i) w.push_back(0);
      if (w.size() < n) w.push_back(1);
    }
    return w;
  };
  return out;
}

std::vector<Word> coprefix_prefixes(const Morphism& h, char seed, std::size_t max_length) {
  const InfiniteWord word = fixed_point(h, seed);
  const Word p = word.prefix(max_length);
  std::vector<Word> out;
  for (std::size_t n = 0; n <= max_length; ++n) out.push_back(p.prefix(n));
  return out;
}

// ---------------------------------------------------------------------------
// Predicates

namespace {

constexpr Letter kA = 0;
constexpr Letter kB = 1;

std::vector<std::pair<Letter, std::size_t>> runs(const Word& w) {
  std::vector<std::pair<Letter, std::size_t>> out;
  for (Letter l : w.letters) {
    if (!out.empty() && out.back().first == l)
      ++out.back().second;
    else
      out.emplace_back(l, 1);
  }
  return out;
}

}  // namespace

namespace predicates {

bool semi_dyck(const Word& w) {
  long height = 0;
  for (Letter l : w.letters) {
    height += l == kA ? 1 : -1;
    if (height < 0) return false;
  }
  return height == 0;
}

bool goldstine(const Word& w) {
  if (w.empty() || w.letters.back() != kB) return false;
  std::size_t index = 1, block = 0;
  bool deviates = false;
  for (Letter l : w.letters) {
    if (l == kA) {
      ++block;
    } else {
      deviates = deviates || block != index;
      ++index;
      block = 0;
    }
  }
  return deviates;
}

bool kemp_s1(const Word& w) {
  const auto r = runs(w);
  if (r.empty() || r.size() % 2 == 0 || r[0] != std::pair<Letter, std::size_t>{kA, 1}) return false;
  for (std::size_t i = 1; i + 1 < r.size(); i += 2)
    if (r[i].first != kB || r[i + 1].second != r[i].second) return false;
  return true;
}

bool kemp_s2(const Word& w) {
  const auto r = runs(w);
  if (r.empty() || r.size() % 2 == 0 || r[0].first != kA) return false;
  for (std::size_t i = 0; i + 1 < r.size(); i += 2)
    if (r[i + 1].second != 2 * r[i].second) return false;
  return true;
}

}  // namespace predicates

// ---------------------------------------------------------------------------
// Oracles

namespace oracles {

namespace {

BigInt multinomial(std::size_t n, std::initializer_list<std::size_t> parts) {
  BigInt out = 1;
  std::size_t rest = n;
  for (std::size_t p : parts) {
    out *= binomial(static_cast<unsigned>(rest), static_cast<unsigned>(p));
    rest -= p;
  }
  return out;
}

// Alphabet of an extension: the base alphabet followed by c.
Alphabet extended(const LanguageOracle& base, char c) {
  if (base.alphabet.contains(c))
    throw std::invalid_argument(std::string("extension letter '") + c + "' already in base alphabet");
  return Alphabet(base.alphabet.symbols() + c);
}

}  // namespace

LanguageOracle semi_dyck() {
  return {"dyck", Alphabet("ab"), predicates::semi_dyck, [](std::size_t n) -> BigCount {
            if (n % 2) return 0;
            return catalan(static_cast<unsigned>(n / 2));
          }};
}

LanguageOracle count_eq(const Alphabet& alphabet, char a, char b) {
  if (a == b) throw std::invalid_argument("count_eq needs two different letters");
  const Letter la = alphabet.index_of(a);
  const Letter lb = alphabet.index_of(b);
  const std::size_t others = alphabet.size() - 2;
  return {std::string("counteq:") + a + "," + b, alphabet,
          [la, lb](const Word& w) { return w.count(la) == w.count(lb); },
          [others](std::size_t n) {
            BigCount total = 0;
            for (std::size_t j = 0; 2 * j <= n; ++j)
              total += multinomial(n, {j, j}) * power_of(others, n - 2 * j);
            return total;
          }};
}

LanguageOracle palindromes(const Alphabet& alphabet) {
  const std::size_t k = alphabet.size();
  return {"pal", alphabet, [](const Word& w) { return w == w.reversed(); },
          [k](std::size_t n) { return power_of(k, (n + 1) / 2); }};
}

LanguageOracle o3() {
  return {"o3", Alphabet("abc"),
          [](const Word& w) {
            const std::size_t a = w.count(0);
            return a == w.count(1) || a == w.count(2);
          },
          [](std::size_t n) {
            BigCount total = 0;
            for (std::size_t i = 0; i <= n; ++i)
              for (std::size_t j = 0; i + j <= n; ++j) {
                const std::size_t k = n - i - j;
                if (i == j || i == k) total += multinomial(n, {i, j});
              }
            return total;
          }};
}

LanguageOracle o4() {
  return {"o4", Alphabet("xXyY"),
          [](const Word& w) { return w.count(0) == w.count(1) || w.count(2) == w.count(3); },
          [](std::size_t n) {
            // |x=X| + |y=Y| - |both|
            BigCount single = 0, both = 0;
            for (std::size_t j = 0; 2 * j <= n; ++j)
              single += multinomial(n, {j, j}) * power_of(2, n - 2 * j);
            if (n % 2 == 0)
              for (std::size_t i = 0; 2 * i <= n; ++i) {
                const std::size_t j = n / 2 - i;
                both += multinomial(n, {i, i, j});
              }
            return 2 * single - both;
          }};
}

LanguageOracle goldstine() { return {"goldstine", Alphabet("ab"), predicates::goldstine, {}}; }

LanguageOracle kemp_s1() { return {"s1", Alphabet("ab"), predicates::kemp_s1, {}}; }

LanguageOracle kemp_s2() { return {"s2", Alphabet("ab"), predicates::kemp_s2, {}}; }

LanguageOracle kemp_base() {
  return {"kemp-base", Alphabet("ab"),
          [](const Word& w) { return predicates::kemp_s1(w) || predicates::kemp_s2(w); },
          {}};
}

LanguageOracle kemp() {
  LanguageOracle k = suffix_extension(kemp_base(), 'c');
  k.name = "kemp";
  return k;
}

LanguageOracle majority(std::size_t m) {
  if (m == 0) throw std::invalid_argument("majority needs m >= 1");
  return {"majority:" + std::to_string(m), Alphabet("ab"),
          [m](const Word& w) { return w.count(0) > m * w.count(1); },
          [m](std::size_t n) {
            BigCount total = 0;
            for (std::size_t bs = 0; bs <= n; ++bs)
              if (n - bs > m * bs) total += binomial(static_cast<unsigned>(n), static_cast<unsigned>(bs));
            return total;
          }};
}

LanguageOracle primitive(const Alphabet& alphabet) {
  const std::size_t k = alphabet.size();
  return {"primitive", alphabet, is_primitive, [k](std::size_t n) {
            BigInt total = 0;
            if (n == 0) return total;
            for (std::size_t d = 1; d <= n; ++d) {
              if (n % d != 0) continue;
              const int mu = moebius(d);
              if (mu != 0) total += mu * power_of(k, n / d);
            }
            return total;
          }};
}

LanguageOracle letter_star() {
  return {"astar", Alphabet("a"), [](const Word&) { return true; },
          [](std::size_t) { return BigCount(1); }};
}

LanguageOracle coprefix(const InfiniteWord& word) {
  const auto prefix = word.prefix;
  const std::size_t k = word.alphabet.size();
  return {"coprefix(" + word.name + ")", word.alphabet,
          [prefix](const Word& w) { return !(prefix(w.size()) == w); },
          [k](std::size_t n) { return power_of(k, n) - 1; }};
}

LanguageOracle coprefix(const Morphism& h, char seed) { return coprefix(fixed_point(h, seed)); }

LanguageOracle suffix_extension(const LanguageOracle& base, char c) {
  Alphabet alphabet = extended(base, c);
  const Letter lc = alphabet.index_of(c);
  const auto member = base.member;
  LanguageOracle out{base.name + "·" + c + "·B*", alphabet,
                     [member, lc](const Word& w) {
                       const auto it = std::find(w.letters.begin(), w.letters.end(), lc);
                       if (it == w.letters.end()) return false;
                       return member(Word({w.letters.begin(), it}));
                     },
                     {}};
  if (base.has_counter()) {
    const auto counter = base.counter;
    const std::size_t k = alphabet.size();
    out.counter = [counter, k](std::size_t n) {
      BigCount total = 0;
      for (std::size_t m = 0; m < n; ++m) total += counter(m) * power_of(k, n - m - 1);
      return total;
    };
  }
  return out;
}

LanguageOracle prefix_extension(const LanguageOracle& base, char c) {
  Alphabet alphabet = extended(base, c);
  const Letter lc = alphabet.index_of(c);
  const auto member = base.member;
  LanguageOracle out{"B*·" + std::string(1, c) + "·" + base.name, alphabet,
                     [member, lc](const Word& w) {
                       const auto it = std::find(w.letters.rbegin(), w.letters.rend(), lc);
                       if (it == w.letters.rend()) return false;
                       return member(Word({it.base(), w.letters.end()}));
                     },
                     {}};
  if (base.has_counter()) {
    const auto counter = base.counter;
    const std::size_t k = alphabet.size();
    out.counter = [counter, k](std::size_t n) {
      BigCount total = 0;
      for (std::size_t m = 0; m < n; ++m) total += counter(m) * power_of(k, n - m - 1);
      return total;
    };
  }
  return out;
}

LanguageOracle infix_extension(const LanguageOracle& base, char c) {
  Alphabet alphabet = extended(base, c);
  const Letter lc = alphabet.index_of(c);
  const auto member = base.member;
  return {"B*·" + std::string(1, c) + "·" + base.name + "·" + c + "·B*", alphabet,
          [member, lc](const Word& w) {
            auto it = std::find(w.letters.begin(), w.letters.end(), lc);
            while (it != w.letters.end()) {
              const auto next = std::find(it + 1, w.letters.end(), lc);
              if (next == w.letters.end()) return false;
              if (member(Word({it + 1, next}))) return true;
              it = next;
            }
            return false;
          },
          {}};
}

LanguageOracle complement(const LanguageOracle& base) {
  const auto member = base.member;
  LanguageOracle out{"not:" + base.name, base.alphabet,
                     [member](const Word& w) { return !member(w); }, {}};
  if (base.has_counter()) {
    const auto counter = base.counter;
    const std::size_t k = base.alphabet.size();
    out.counter = [counter, k](std::size_t n) { return power_of(k, n) - counter(n); };
  }
  return out;
}

LanguageOracle from_dfa(const Dfa& dfa, std::string name) {
  return {std::move(name), dfa.alphabet(), [dfa](const Word& w) { return dfa.accepts(w); },
          [dfa](std::size_t n) { return count_words(dfa, n).counts[n]; }};
}

LanguageOracle diagonal(const Alphabet& alphabet, std::uint64_t budget) {
  auto lang = std::make_shared<DiagonalLanguage>(alphabet, budget);
  return {"diagonal", alphabet, [lang](const Word& w) { return lang->contains(w); }, {}};
}

}  // namespace oracles

// ---------------------------------------------------------------------------
// Pinned enumeration and the diagonal program

Dfa pinned_dfa(const Alphabet& alphabet, std::uint64_t index) {
  const std::size_t k = alphabet.size();
  BigInt rank = index;
  std::size_t s = 1;
  while (true) {
    const BigInt group = power_of(2, s) * power_of(s, s * k);
    if (rank < group) break;
    rank -= group;
    ++s;
  }
  // Mixed radix, least significant digit = last transition byte.
  std::vector<State> delta(s * k);
  for (std::size_t i = s * k; i-- > 0;) {
    delta[i] = static_cast<State>(static_cast<std::uint64_t>(rank % s));
    rank /= s;
  }
  std::vector<bool> accepting(s);
  for (std::size_t q = s; q-- > 0;) {
    accepting[q] = rank % 2 == 1;
    rank /= 2;
  }
  return Dfa(alphabet, s, 0, std::move(accepting), std::move(delta));
}

DiagonalLanguage::DiagonalLanguage(Alphabet alphabet, std::uint64_t budget)
    : alphabet_(std::move(alphabet)), budget_(budget) {
  if (alphabet_.size() < 2) throw std::invalid_argument("diagonal language needs |A| >= 2");
}

const DiagonalLanguage::Step& DiagonalLanguage::step(std::size_t i) const {
  while (cache_.size() <= i) {
    const std::size_t longer_than = cache_.empty() ? 0 : cache_.back().word.size();
    while (true) {
      if (next_machine_ >= budget_)
        throw ResourceError("diagonal program exhausted its budget of " + std::to_string(budget_) +
                            " automata");
      const std::uint64_t machine = next_machine_++;
      const Dfa candidate = pinned_dfa(alphabet_, machine);
      if (!is_coinfinite(candidate)) continue;
      auto u = shortlex_least_member(complement(candidate), longer_than);
      if (!u) throw std::logic_error("co-infinite automaton without long non-members");
      cache_.push_back({machine, std::move(*u)});
      break;
    }
  }
  return cache_[i];
}

bool DiagonalLanguage::contains(const Word& w) const {
  std::lock_guard lock(mutex_);
  for (std::size_t i = 0;; ++i) {
    const Step& s = step(i);
    if (w == s.word) return true;
    if (w < s.word) return false;
  }
}

std::vector<DiagonalLanguage::Step> DiagonalLanguage::steps(std::size_t n) const {
  std::lock_guard lock(mutex_);
  if (n > 0) step(n - 1);
  return {cache_.begin(), cache_.begin() + static_cast<std::ptrdiff_t>(n)};
}

// ---------------------------------------------------------------------------
// Name parsing

namespace {

std::size_t parse_count(std::string_view text, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument(std::string("invalid ") + what + " '" + std::string(text) + "'");
  return value;
}

LanguageOracle parse_extension(std::string_view rest, std::string_view kind) {
  const auto colon = rest.rfind(':');
  if (colon == std::string_view::npos || colon + 2 != rest.size() || colon == 0)
    throw std::invalid_argument(std::string(kind) + " expects <base>:<letter>");
  const LanguageOracle base = parse_oracle(rest.substr(0, colon));
  const char c = rest.back();
  if (kind == "suffix-ext") return oracles::suffix_extension(base, c);
  if (kind == "prefix-ext") return oracles::prefix_extension(base, c);
  return oracles::infix_extension(base, c);
}

}  // namespace

LanguageOracle parse_oracle(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view head = spec.substr(0, colon);
  const std::string_view rest = colon == std::string_view::npos ? "" : spec.substr(colon + 1);
  const bool has_rest = colon != std::string_view::npos;
  const auto alphabet_or_default = [&] { return Alphabet(has_rest ? rest : "ab"); };

  if (head == "dyck" && !has_rest) return oracles::semi_dyck();
  if (head == "o3" && !has_rest) return oracles::o3();
  if (head == "o4" && !has_rest) return oracles::o4();
  if (head == "goldstine" && !has_rest) return oracles::goldstine();
  if (head == "kemp" && !has_rest) return oracles::kemp();
  if (head == "s1" && !has_rest) return oracles::kemp_s1();
  if (head == "s2" && !has_rest) return oracles::kemp_s2();
  if (head == "kemp-base" && !has_rest) return oracles::kemp_base();
  if (head == "astar" && !has_rest) return oracles::letter_star();
  if (head == "pal") return oracles::palindromes(alphabet_or_default());
  if (head == "primitive") return oracles::primitive(alphabet_or_default());
  if (head == "diagonal") return oracles::diagonal(alphabet_or_default());
  if (head == "majority" && has_rest) return oracles::majority(parse_count(rest, "majority parameter"));
  if (head == "counteq" && has_rest) {
    // counteq:a,b or counteq:a,b:<alphabet>
    if (rest.size() < 3 || rest[1] != ',')
      throw std::invalid_argument("counteq expects counteq:a,b[:alphabet]");
    const char a = rest[0], b = rest[2];
    if (rest.size() == 3) return oracles::count_eq(Alphabet{a, b}, a, b);
    if (rest[3] != ':') throw std::invalid_argument("counteq expects counteq:a,b[:alphabet]");
    return oracles::count_eq(Alphabet(rest.substr(4)), a, b);
  }
  if (head == "coprefix" && has_rest) {
    const Morphism h = Morphism::parse(rest);
    return oracles::coprefix(h, h.alphabet.symbol(0));
  }
  if ((head == "suffix-ext" || head == "prefix-ext" || head == "infix-ext") && has_rest)
    return parse_extension(rest, head);
  if (head == "not" && has_rest) return oracles::complement(parse_oracle(rest));
  throw std::invalid_argument("unknown oracle '" + std::string(spec) + "'");
}

}  // namespace regmeasure
