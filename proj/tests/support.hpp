// Helpers shared by the unit tests: word literals and brute-force reference
// implementations that do not go through the library code under test.

#ifndef REGMEASURE_TESTS_SUPPORT_HPP
#define REGMEASURE_TESTS_SUPPORT_HPP

#include <set>
#include <string>
#include <vector>

#include "regmeasure/automata.hpp"
#include "regmeasure/core.hpp"

namespace testing_support {

using namespace regmeasure;

inline Word W(const Alphabet& a, const std::string& text) { return parse_word(a, text); }

inline const Alphabet& ab() {
  static const Alphabet a("ab");
  return a;
}

/// All words of length ≤ n, as strings over the symbols, built by string concatenation.
inline std::vector<std::string> all_strings(const std::string& symbols, std::size_t n) {
  std::vector<std::string> out{""};
  std::vector<std::string> layer{""};
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<std::string> next;
    for (const auto& s : layer)
      for (char c : symbols) next.push_back(s + c);
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

/// w is u^k for some k ≥ 2, by trying every root.
inline bool is_proper_power(const std::string& w) {
  for (std::size_t d = 1; d < w.size(); ++d) {
    if (w.size() % d) continue;
    std::string power;
    while (power.size() < w.size()) power += w.substr(0, d);
    if (power == w) return true;
  }
  return false;
}

/// Semi-Dyck words of length exactly 2n from the grammar S → a S b S | ε.
inline std::set<std::string> dyck_words(std::size_t n) {
  std::vector<std::set<std::string>> by(n + 1);
  by[0] = {""};
  for (std::size_t m = 1; m <= n; ++m)
    for (std::size_t i = 0; i < m; ++i)
      for (const auto& u : by[i])
        for (const auto& v : by[m - 1 - i]) by[m].insert("a" + u + "b" + v);
  return by[n];
}

/// Goldstine words of length ≤ n generated from block sequences.
inline std::set<std::string> goldstine_words(std::size_t n) {
  std::set<std::string> out;
  // blocks: current word, next index, whether a block already deviated
  struct Partial {
    std::string w;
    std::size_t index;
    bool deviated;
  };
  std::vector<Partial> todo{{"", 1, false}};
  while (!todo.empty()) {
    const Partial p = todo.back();
    todo.pop_back();
    for (std::size_t len = 0; p.w.size() + len + 1 <= n; ++len) {
      Partial q{p.w + std::string(len, 'a') + "b", p.index + 1, p.deviated || len != p.index};
      if (q.deviated) out.insert(q.w);
      todo.push_back(q);
    }
  }
  return out;
}

/// S1 = a(b^i a^i)* and S2 = (a^i b^{2i})* a^+ words of length ≤ n, generated.
inline std::set<std::string> kemp_s1_words(std::size_t n) {
  std::set<std::string> out;
  std::vector<std::string> todo{"a"};
  while (!todo.empty()) {
    const std::string w = todo.back();
    todo.pop_back();
    out.insert(w);
    for (std::size_t i = 1; w.size() + 2 * i <= n; ++i)
      todo.push_back(w + std::string(i, 'b') + std::string(i, 'a'));
  }
  return out;
}

inline std::set<std::string> kemp_s2_words(std::size_t n) {
  std::set<std::string> out;
  std::vector<std::string> todo{""};
  while (!todo.empty()) {
    const std::string w = todo.back();
    todo.pop_back();
    for (std::size_t r = 1; w.size() + r <= n; ++r) out.insert(w + std::string(r, 'a'));
    for (std::size_t i = 1; w.size() + 3 * i <= n; ++i)
      todo.push_back(w + std::string(i, 'a') + std::string(2 * i, 'b'));
  }
  return out;
}

/// Exact Cesàro mean of the acceptance ratios over lengths 0..n-1, by
/// straightforward dynamic programming over state vectors.
inline Rational cesaro_by_simulation(const Dfa& x, std::size_t n) {
  const std::size_t k = x.alphabet().size();
  std::vector<BigInt> mass(x.state_count(), 0);
  mass[x.initial()] = 1;
  Rational sum = 0;
  BigInt total = 1;
  for (std::size_t len = 0; len < n; ++len) {
    BigInt acc = 0;
    for (State q = 0; q < x.state_count(); ++q)
      if (x.is_accepting(q)) acc += mass[q];
    sum += Rational(acc, total);
    std::vector<BigInt> next(x.state_count(), 0);
    for (State q = 0; q < x.state_count(); ++q)
      for (Letter a = 0; a < k; ++a) next[x.next(q, a)] += mass[q];
    mass = std::move(next);
    total *= k;
  }
  return sum / Rational(static_cast<long>(n));
}

/// Acceptance ratio at length n, by the same simulation.
inline Rational ratio_by_simulation(const Dfa& x, std::size_t n) {
  const std::size_t k = x.alphabet().size();
  std::vector<BigInt> mass(x.state_count(), 0);
  mass[x.initial()] = 1;
  BigInt total = 1;
  for (std::size_t len = 0; len < n; ++len) {
    std::vector<BigInt> next(x.state_count(), 0);
    for (State q = 0; q < x.state_count(); ++q)
      for (Letter a = 0; a < k; ++a) next[x.next(q, a)] += mass[q];
    mass = std::move(next);
    total *= k;
  }
  BigInt acc = 0;
  for (State q = 0; q < x.state_count(); ++q)
    if (x.is_accepting(q)) acc += mass[q];
  return Rational(acc, total);
}

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace testing_support

#endif  // REGMEASURE_TESTS_SUPPORT_HPP
