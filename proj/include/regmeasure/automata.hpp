// Finite automata: total DFAs, NFAs with epsilon edges, Boolean closure,
// minimization, exact word counting and forbidden-factor detection.

#ifndef REGMEASURE_AUTOMATA_HPP
#define REGMEASURE_AUTOMATA_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "regmeasure/core.hpp"

namespace regmeasure {

using State = std::uint32_t;

/// Total deterministic automaton. Transitions are stored row-major:
/// delta[q * |A| + a].
class Dfa {
 public:
  Dfa(Alphabet alphabet, std::size_t states, State initial, std::vector<bool> accepting,
      std::vector<State> delta);

  /// Automaton for the empty language (one rejecting state).
  static Dfa empty(const Alphabet& alphabet);
  /// Automaton for A* (one accepting state).
  static Dfa universal(const Alphabet& alphabet);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t state_count() const { return states_; }
  State initial() const { return initial_; }
  bool is_accepting(State q) const { return accepting_[q]; }
  const std::vector<bool>& accepting() const { return accepting_; }
  const std::vector<State>& delta() const { return delta_; }

  State next(State q, Letter a) const { return delta_[q * alphabet_.size() + a]; }
  State run(const Word& w, State from) const;
  State run(const Word& w) const { return run(w, initial_); }
  bool accepts(const Word& w) const { return accepting_[run(w)]; }

  /// Structural equality; two minimized automata are equal iff their languages are.
  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  Alphabet alphabet_;
  std::size_t states_;
  State initial_;
  std::vector<bool> accepting_;
  std::vector<State> delta_;
};

/// Nondeterministic automaton with optional epsilon edges.
class Nfa {
 public:
  Nfa(Alphabet alphabet, std::size_t states);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t state_count() const { return transitions_.size(); }

  State add_state();
  void add_transition(State from, Letter a, State to);
  void add_epsilon(State from, State to);
  void add_initial(State q);
  void set_accepting(State q, bool accepting = true);

  const std::vector<State>& targets(State q, Letter a) const { return transitions_[q][a]; }
  const std::vector<State>& epsilon_targets(State q) const { return epsilon_[q]; }
  const std::vector<State>& initial() const { return initial_; }
  bool is_accepting(State q) const { return accepting_[q]; }

 private:
  void check_state(State q) const;

  Alphabet alphabet_;
  std::vector<std::vector<std::vector<State>>> transitions_;
  std::vector<std::vector<State>> epsilon_;
  std::vector<State> initial_;
  std::vector<bool> accepting_;
};

/// Letter-count matrix of a DFA: entry (p, q) is the number of letters moving p to q.
/// Stored sparsely by rows.
class TransferMatrix {
 public:
  explicit TransferMatrix(const Dfa& dfa);

  std::size_t dimension() const { return rows_.size(); }
  BigCount entry(State p, State q) const;
  BigCount row_sum(State p) const;
  const std::vector<std::pair<State, std::uint32_t>>& row(State p) const { return rows_[p]; }

 private:
  std::vector<std::vector<std::pair<State, std::uint32_t>>> rows_;
};

enum class BoolOp { union_, intersection, difference };

Dfa combine(const Dfa& x, const Dfa& y, BoolOp op);
Dfa complement(const Dfa& x);
/// Minimal automaton, states renumbered by breadth-first search from the
/// initial state in letter order.
Dfa minimize(const Dfa& x);
/// Subset construction; the result is total and contains only reachable subsets.
Dfa determinize(const Nfa& x);
/// Automaton for the reversed language.
Dfa reverse(const Dfa& x);

/// Same language over a larger alphabet; new letters lead to a rejecting sink.
Dfa extend_alphabet(const Dfa& x, const Alphabet& wider);

bool is_empty(const Dfa& x);
bool is_subset(const Dfa& x, const Dfa& y);
bool equivalent(const Dfa& x, const Dfa& y);

/// counts[n] = number of accepted words of length n, n = 0..max_length.
LengthCensus count_words(const Dfa& x, std::size_t max_length);

/// States that are reachable from the initial state and can reach an accepting state.
std::vector<bool> useful_states(const Dfa& x);

/// Shortest, then shortlex-least, w with L ∩ A*wA* = ∅; nullopt when L is dense.
std::optional<Word> shortest_forbidden_word(const Dfa& x);
/// Shortest, then shortlex-least, w with L ∩ wA* = ∅; nullopt when none exists.
std::optional<Word> shortest_forbidden_prefix(const Dfa& x);
/// True iff L ∩ A*wA* = ∅.
bool is_forbidden_word(const Dfa& x, const Word& w);

/// Automaton for {w : |w|_a ≢ |w|_b (mod k)}; every other letter of the
/// alphabet is a self-loop. Requires k ≥ 1 and a ≠ b.
Dfa mod_counter_dfa(const Alphabet& alphabet, std::size_t k, char a, char b);
/// Same, over the alphabet {a, b} ∪ loops sorted by symbol.
Dfa mod_counter_dfa(std::size_t k, char a, char b, std::string_view loops = {});

bool language_infinite(const Dfa& x);
bool is_coinfinite(const Dfa& x);

/// Shortlex-least accepted word of any length.
std::optional<Word> shortlex_least_word(const Dfa& x);
/// Shortlex-least accepted word u with |u| > longer_than.
std::optional<Word> shortlex_least_member(const Dfa& x, std::size_t longer_than);

/// Automaton for a finite set of words (trie, then minimized).
Dfa dfa_for_words(const Alphabet& alphabet, const std::vector<Word>& words);

/// Small standard machines used throughout: A*, ∅, (AA)*, {a}A*, A*{a}, a*.
namespace machines {
Dfa even_length(const Alphabet& alphabet);
Dfa starts_with(const Alphabet& alphabet, char a);
Dfa ends_with(const Alphabet& alphabet, char a);
Dfa letter_star(const Alphabet& alphabet, char a);
/// A* w A*
Dfa contains_factor(const Alphabet& alphabet, const Word& w);
}  // namespace machines

}  // namespace regmeasure

#endif  // REGMEASURE_AUTOMATA_HPP
