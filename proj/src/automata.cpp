#include "regmeasure/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace regmeasure {

// ---------------------------------------------------------------------------
// Dfa

Dfa::Dfa(Alphabet alphabet, std::size_t states, State initial, std::vector<bool> accepting,
         std::vector<State> delta)
    : alphabet_(std::move(alphabet)),
      states_(states),
      initial_(initial),
      accepting_(std::move(accepting)),
      delta_(std::move(delta)) {
  if (states_ == 0) throw std::invalid_argument("dfa needs at least one state");
  if (initial_ >= states_) throw std::invalid_argument("dfa initial state out of range");
  if (accepting_.size() != states_)
    throw std::invalid_argument("dfa accepting vector has wrong size");
  if (delta_.size() != states_ * alphabet_.size())
    throw std::invalid_argument("dfa transition table has wrong size");
  for (State t : delta_)
    if (t >= states_) throw std::invalid_argument("dfa transition target out of range");
}

Dfa Dfa::empty(const Alphabet& alphabet) {
  return Dfa(alphabet, 1, 0, {false}, std::vector<State>(alphabet.size(), 0));
}

Dfa Dfa::universal(const Alphabet& alphabet) {
  return Dfa(alphabet, 1, 0, {true}, std::vector<State>(alphabet.size(), 0));
}

State Dfa::run(const Word& w, State from) const {
  State q = from;
  for (Letter a : w.letters) {
    if (a >= alphabet_.size()) throw std::invalid_argument("letter outside dfa alphabet");
    q = next(q, a);
  }
  return q;
}

// ---------------------------------------------------------------------------
// Nfa

Nfa::Nfa(Alphabet alphabet, std::size_t states)
    : alphabet_(std::move(alphabet)),
      transitions_(states, std::vector<std::vector<State>>(alphabet_.size())),
      epsilon_(states),
      accepting_(states, false) {}

State Nfa::add_state() {
  transitions_.emplace_back(alphabet_.size());
  epsilon_.emplace_back();
  accepting_.push_back(false);
  return static_cast<State>(transitions_.size() - 1);
}

void Nfa::check_state(State q) const {
  if (q >= transitions_.size()) throw std::invalid_argument("nfa state out of range");
}

void Nfa::add_transition(State from, Letter a, State to) {
  check_state(from);
  check_state(to);
  if (a >= alphabet_.size()) throw std::invalid_argument("nfa letter out of range");
  transitions_[from][a].push_back(to);
}

void Nfa::add_epsilon(State from, State to) {
  check_state(from);
  check_state(to);
  epsilon_[from].push_back(to);
}

void Nfa::add_initial(State q) {
  check_state(q);
  initial_.push_back(q);
}

void Nfa::set_accepting(State q, bool accepting) {
  check_state(q);
  accepting_[q] = accepting;
}

// ---------------------------------------------------------------------------
// TransferMatrix

TransferMatrix::TransferMatrix(const Dfa& dfa) : rows_(dfa.state_count()) {
  const std::size_t k = dfa.alphabet().size();
  for (State p = 0; p < dfa.state_count(); ++p) {
    std::map<State, std::uint32_t> row;
    for (Letter a = 0; a < k; ++a) ++row[dfa.next(p, a)];
    rows_[p].assign(row.begin(), row.end());
  }
}

BigCount TransferMatrix::entry(State p, State q) const {
  for (const auto& [target, mult] : rows_.at(p))
    if (target == q) return mult;
  return 0;
}

BigCount TransferMatrix::row_sum(State p) const {
  BigCount s = 0;
  for (const auto& [target, mult] : rows_.at(p)) s += mult;
  return s;
}

// ---------------------------------------------------------------------------
// Boolean operations

namespace {

void require_same_alphabet(const Dfa& x, const Dfa& y) {
  if (!(x.alphabet() == y.alphabet()))
    throw AlphabetMismatch("alphabet mismatch: '" + x.alphabet().symbols() + "' vs '" +
                           y.alphabet().symbols() + "'");
}

bool apply(BoolOp op, bool a, bool b) {
  switch (op) {
    case BoolOp::union_: return a || b;
    case BoolOp::intersection: return a && b;
    case BoolOp::difference: return a && !b;
  }
  return false;
}

std::vector<State> reachable_order(const Dfa& x) {
  const std::size_t k = x.alphabet().size();
  std::vector<State> order;
  std::vector<bool> seen(x.state_count(), false);
  order.push_back(x.initial());
  seen[x.initial()] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Letter a = 0; a < k; ++a) {
      const State t = x.next(order[i], a);
      if (!seen[t]) {
        seen[t] = true;
        order.push_back(t);
      }
    }
  }
  return order;
}

}  // namespace

Dfa combine(const Dfa& x, const Dfa& y, BoolOp op) {
  require_same_alphabet(x, y);
  const std::size_t k = x.alphabet().size();
  std::map<std::pair<State, State>, State> index;
  std::vector<std::pair<State, State>> pairs;
  const auto intern = [&](State p, State q) {
    auto [it, inserted] = index.try_emplace({p, q}, static_cast<State>(pairs.size()));
    if (inserted) pairs.emplace_back(p, q);
    return it->second;
  };
  intern(x.initial(), y.initial());
  std::vector<State> delta;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [p, q] = pairs[i];
    for (Letter a = 0; a < k; ++a) delta.push_back(intern(x.next(p, a), y.next(q, a)));
  }
  std::vector<bool> accepting(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    accepting[i] = apply(op, x.is_accepting(pairs[i].first), y.is_accepting(pairs[i].second));
  return Dfa(x.alphabet(), pairs.size(), 0, std::move(accepting), std::move(delta));
}

Dfa complement(const Dfa& x) {
  std::vector<bool> accepting = x.accepting();
  accepting.flip();
  return Dfa(x.alphabet(), x.state_count(), x.initial(), std::move(accepting), x.delta());
}

// ---------------------------------------------------------------------------
// Minimization (Hopcroft partition refinement)

Dfa minimize(const Dfa& input) {
  const std::size_t k = input.alphabet().size();

  // Restrict to reachable states.
  const std::vector<State> order = reachable_order(input);
  const std::size_t n = order.size();
  std::vector<State> local(input.state_count(), 0);
  for (std::size_t i = 0; i < n; ++i) local[order[i]] = static_cast<State>(i);
  std::vector<State> delta(n * k);
  std::vector<bool> accepting(n);
  for (std::size_t i = 0; i < n; ++i) {
    accepting[i] = input.is_accepting(order[i]);
    for (Letter a = 0; a < k; ++a) delta[i * k + a] = local[input.next(order[i], a)];
  }

  // inverse[a][q] lists predecessors of q on letter a
  std::vector<std::vector<std::vector<State>>> inverse(k, std::vector<std::vector<State>>(n));
  for (State q = 0; q < n; ++q)
    for (Letter a = 0; a < k; ++a) inverse[a][delta[q * k + a]].push_back(q);

  std::vector<std::vector<State>> blocks;
  std::vector<std::size_t> block_of(n);
  {
    std::vector<State> acc, rej;
    for (State q = 0; q < n; ++q) (accepting[q] ? acc : rej).push_back(q);
    for (auto* b : {&acc, &rej}) {
      if (b->empty()) continue;
      for (State q : *b) block_of[q] = blocks.size();
      blocks.push_back(std::move(*b));
    }
  }

  std::deque<std::pair<std::size_t, Letter>> work;
  std::vector<std::vector<bool>> in_work;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    in_work.emplace_back(k, true);
    for (Letter a = 0; a < k; ++a) work.emplace_back(b, a);
  }

  std::vector<std::size_t> marked_count;
  std::vector<std::vector<State>> marked;
  while (!work.empty()) {
    const auto [splitter, a] = work.front();
    work.pop_front();
    in_work[splitter][a] = false;

    std::vector<State> preimage;
    for (State q : blocks[splitter])
      for (State p : inverse[a][q]) preimage.push_back(p);

    marked_count.assign(blocks.size(), 0);
    marked.resize(blocks.size());
    std::vector<std::size_t> touched;
    for (State p : preimage) {
      const std::size_t b = block_of[p];
      if (marked_count[b]++ == 0) {
        touched.push_back(b);
        marked[b].clear();
      }
      marked[b].push_back(p);
    }

    for (std::size_t b : touched) {
      if (marked_count[b] == blocks[b].size()) continue;
      // split b into (b \ marked) and a new block holding the marked states
      const std::size_t fresh = blocks.size();
      std::vector<State> rest;
      rest.reserve(blocks[b].size() - marked[b].size());
      for (State p : marked[b]) block_of[p] = fresh;
      for (State q : blocks[b])
        if (block_of[q] != fresh) rest.push_back(q);
      blocks[b] = std::move(rest);
      blocks.push_back(marked[b]);
      in_work.emplace_back(k, false);
      for (Letter c = 0; c < k; ++c) {
        if (in_work[b][c]) {
          work.emplace_back(fresh, c);
          in_work[fresh][c] = true;
        } else {
          const std::size_t smaller = blocks[b].size() <= blocks[fresh].size() ? b : fresh;
          work.emplace_back(smaller, c);
          in_work[smaller][c] = true;
        }
      }
    }
  }

  // Canonical numbering: BFS over blocks from the initial block, letters in order.
  std::vector<State> number(blocks.size(), static_cast<State>(-1));
  std::vector<std::size_t> queue{block_of[0]};
  number[block_of[0]] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const State rep = blocks[queue[i]].front();
    for (Letter c = 0; c < k; ++c) {
      const std::size_t tb = block_of[delta[rep * k + c]];
      if (number[tb] == static_cast<State>(-1)) {
        number[tb] = static_cast<State>(queue.size());
        queue.push_back(tb);
      }
    }
  }
  const std::size_t m = queue.size();
  std::vector<State> mdelta(m * k);
  std::vector<bool> macc(m);
  for (std::size_t i = 0; i < m; ++i) {
    const State rep = blocks[queue[i]].front();
    macc[i] = accepting[rep];
    for (Letter c = 0; c < k; ++c) mdelta[i * k + c] = number[block_of[delta[rep * k + c]]];
  }
  return Dfa(input.alphabet(), m, 0, std::move(macc), std::move(mdelta));
}

// ---------------------------------------------------------------------------
// Subset construction

namespace {

std::vector<State> epsilon_closure(const Nfa& x, std::vector<State> set) {
  std::vector<bool> in(x.state_count(), false);
  for (State q : set) in[q] = true;
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (State t : x.epsilon_targets(set[i])) {
      if (!in[t]) {
        in[t] = true;
        set.push_back(t);
      }
    }
  }
  std::sort(set.begin(), set.end());
  return set;
}

}  // namespace

Dfa determinize(const Nfa& x) {
  const std::size_t k = x.alphabet().size();
  std::map<std::vector<State>, State> index;
  std::vector<std::vector<State>> subsets;
  const auto intern = [&](std::vector<State> s) {
    auto [it, inserted] = index.try_emplace(s, static_cast<State>(subsets.size()));
    if (inserted) subsets.push_back(std::move(s));
    return it->second;
  };
  intern(epsilon_closure(x, x.initial()));
  std::vector<State> delta;
  std::vector<bool> seen(x.state_count());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (Letter a = 0; a < k; ++a) {
      std::vector<State> next;
      std::fill(seen.begin(), seen.end(), false);
      for (State q : subsets[i]) {
        for (State t : x.targets(q, a)) {
          if (!seen[t]) {
            seen[t] = true;
            next.push_back(t);
          }
        }
      }
      delta.push_back(intern(epsilon_closure(x, std::move(next))));
    }
  }
  std::vector<bool> accepting(subsets.size(), false);
  for (std::size_t i = 0; i < subsets.size(); ++i)
    accepting[i] = std::any_of(subsets[i].begin(), subsets[i].end(),
                               [&](State q) { return x.is_accepting(q); });
  return Dfa(x.alphabet(), subsets.size(), 0, std::move(accepting), std::move(delta));
}

Dfa reverse(const Dfa& x) {
  Nfa n(x.alphabet(), x.state_count());
  for (State q = 0; q < x.state_count(); ++q) {
    for (Letter a = 0; a < x.alphabet().size(); ++a) n.add_transition(x.next(q, a), a, q);
    if (x.is_accepting(q)) n.add_initial(q);
  }
  n.set_accepting(x.initial());
  return minimize(determinize(n));
}

Dfa extend_alphabet(const Dfa& x, const Alphabet& wider) {
  const std::size_t k = x.alphabet().size();
  for (char c : x.alphabet().symbols())
    if (!wider.contains(c))
      throw AlphabetMismatch(std::string("symbol '") + c + "' missing from wider alphabet");
  const std::size_t n = x.state_count();
  const State sink = static_cast<State>(n);
  std::vector<State> delta((n + 1) * wider.size(), sink);
  for (State q = 0; q < n; ++q)
    for (Letter a = 0; a < k; ++a)
      delta[q * wider.size() + wider.index_of(x.alphabet().symbol(a))] = x.next(q, a);
  std::vector<bool> accepting = x.accepting();
  accepting.push_back(false);
  return Dfa(wider, n + 1, x.initial(), std::move(accepting), std::move(delta));
}

bool is_empty(const Dfa& x) {
  for (State q : reachable_order(x))
    if (x.is_accepting(q)) return false;
  return true;
}

bool is_subset(const Dfa& x, const Dfa& y) { return is_empty(combine(x, y, BoolOp::difference)); }

bool equivalent(const Dfa& x, const Dfa& y) { return is_subset(x, y) && is_subset(y, x); }

// ---------------------------------------------------------------------------
// Counting

LengthCensus count_words(const Dfa& x, std::size_t max_length) {
  const TransferMatrix m(x);
  LengthCensus census;
  census.alphabet_size = x.alphabet().size();
  census.counts.reserve(max_length + 1);
  std::vector<BigCount> dist(x.state_count(), 0);
  dist[x.initial()] = 1;
  for (std::size_t n = 0;; ++n) {
    BigCount accepted = 0;
    for (State q = 0; q < x.state_count(); ++q)
      if (x.is_accepting(q)) accepted += dist[q];
    census.counts.push_back(std::move(accepted));
    if (n == max_length) break;
    std::vector<BigCount> next(x.state_count(), 0);
    for (State p = 0; p < x.state_count(); ++p) {
      if (dist[p] == 0) continue;
      for (const auto& [q, mult] : m.row(p)) next[q] += dist[p] * mult;
    }
    dist = std::move(next);
  }
  return census;
}

// ---------------------------------------------------------------------------
// Forbidden words and prefixes

std::vector<bool> useful_states(const Dfa& x) {
  const std::size_t k = x.alphabet().size();
  const std::size_t n = x.state_count();
  std::vector<bool> reachable(n, false);
  for (State q : reachable_order(x)) reachable[q] = true;

  std::vector<std::vector<State>> preds(n);
  for (State q = 0; q < n; ++q)
    for (Letter a = 0; a < k; ++a) preds[x.next(q, a)].push_back(q);
  std::vector<bool> coaccessible(n, false);
  std::vector<State> stack;
  for (State q = 0; q < n; ++q) {
    if (x.is_accepting(q)) {
      coaccessible[q] = true;
      stack.push_back(q);
    }
  }
  while (!stack.empty()) {
    const State q = stack.back();
    stack.pop_back();
    for (State p : preds[q]) {
      if (!coaccessible[p]) {
        coaccessible[p] = true;
        stack.push_back(p);
      }
    }
  }
  std::vector<bool> useful(n);
  for (State q = 0; q < n; ++q) useful[q] = reachable[q] && coaccessible[q];
  return useful;
}

namespace {

// Automaton for the factor language (from_any_state) or the prefix language of L(x).
Dfa factor_or_prefix_language(const Dfa& x, bool from_any_state) {
  const std::vector<bool> useful = useful_states(x);
  const std::size_t n = x.state_count();
  Nfa nfa(x.alphabet(), n + 1);
  const State fresh = static_cast<State>(n);
  bool any = false;
  for (State q = 0; q < n; ++q) {
    if (!useful[q]) continue;
    any = true;
    nfa.set_accepting(q);
    if (from_any_state) nfa.add_epsilon(fresh, q);
    for (Letter a = 0; a < x.alphabet().size(); ++a)
      if (useful[x.next(q, a)]) nfa.add_transition(q, a, x.next(q, a));
  }
  if (!any) return Dfa::empty(x.alphabet());
  nfa.add_initial(from_any_state ? fresh : x.initial());
  return minimize(determinize(nfa));
}

}  // namespace

std::optional<Word> shortest_forbidden_word(const Dfa& x) {
  return shortlex_least_word(complement(factor_or_prefix_language(x, true)));
}

std::optional<Word> shortest_forbidden_prefix(const Dfa& x) {
  return shortlex_least_word(complement(factor_or_prefix_language(x, false)));
}

bool is_forbidden_word(const Dfa& x, const Word& w) {
  return !factor_or_prefix_language(x, true).accepts(w);
}

// ---------------------------------------------------------------------------
// Counters, infiniteness, shortlex witnesses

Dfa mod_counter_dfa(const Alphabet& alphabet, std::size_t k, char a, char b) {
  if (k == 0) throw std::invalid_argument("mod_counter_dfa: modulus must be at least 1");
  if (a == b) throw std::invalid_argument("mod_counter_dfa: counted letters must differ");
  const Letter la = alphabet.index_of(a);
  const Letter lb = alphabet.index_of(b);
  const std::size_t width = alphabet.size();
  std::vector<State> delta(k * width);
  std::vector<bool> accepting(k, true);
  accepting[0] = false;
  for (std::size_t i = 0; i < k; ++i) {
    for (Letter l = 0; l < width; ++l) delta[i * width + l] = static_cast<State>(i);
    delta[i * width + la] = static_cast<State>((i + 1) % k);
    delta[i * width + lb] = static_cast<State>((i + k - 1) % k);
  }
  return Dfa(alphabet, k, 0, std::move(accepting), std::move(delta));
}

Dfa mod_counter_dfa(std::size_t k, char a, char b, std::string_view loops) {
  std::string symbols{a, b};
  for (char c : loops) {
    if (c == a || c == b)
      throw std::invalid_argument("mod_counter_dfa: loop letters must differ from counted letters");
    symbols.push_back(c);
  }
  std::sort(symbols.begin(), symbols.end());
  return mod_counter_dfa(Alphabet(symbols), k, a, b);
}

namespace {

bool has_cycle_among(const Dfa& x, const std::vector<bool>& keep) {
  const std::size_t k = x.alphabet().size();
  // 0 = unvisited, 1 = on stack, 2 = done
  std::vector<int> color(x.state_count(), 0);
  for (State root = 0; root < x.state_count(); ++root) {
    if (!keep[root] || color[root] != 0) continue;
    std::vector<std::pair<State, Letter>> stack{{root, 0}};
    color[root] = 1;
    while (!stack.empty()) {
      auto& [q, next_letter] = stack.back();
      if (next_letter == k) {
        color[q] = 2;
        stack.pop_back();
        continue;
      }
      const State t = x.next(q, next_letter++);
      if (!keep[t]) continue;
      if (color[t] == 1) return true;
      if (color[t] == 0) {
        color[t] = 1;
        stack.emplace_back(t, 0);
      }
    }
  }
  return false;
}

}  // namespace

bool language_infinite(const Dfa& x) { return has_cycle_among(x, useful_states(x)); }

bool is_coinfinite(const Dfa& x) { return language_infinite(complement(x)); }

std::optional<Word> shortlex_least_word(const Dfa& x) {
  // BFS in letter order discovers every state first along its shortlex-least word.
  const std::size_t k = x.alphabet().size();
  std::vector<State> parent(x.state_count(), 0);
  std::vector<Letter> via(x.state_count(), 0);
  std::vector<bool> seen(x.state_count(), false);
  std::vector<State> queue{x.initial()};
  seen[x.initial()] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const State q = queue[i];
    if (x.is_accepting(q)) {
      Word w;
      for (State s = q; s != x.initial(); s = parent[s]) w.letters.push_back(via[s]);
      std::reverse(w.letters.begin(), w.letters.end());
      return w;
    }
    for (Letter a = 0; a < k; ++a) {
      const State t = x.next(q, a);
      if (!seen[t]) {
        seen[t] = true;
        parent[t] = q;
        via[t] = a;
        queue.push_back(t);
      }
    }
  }
  return std::nullopt;
}

std::optional<Word> shortlex_least_member(const Dfa& x, std::size_t longer_than) {
  // Product with a saturating length counter 0..longer_than+1.
  const std::size_t k = x.alphabet().size();
  const std::size_t levels = longer_than + 2;
  const std::size_t n = x.state_count() * levels;
  std::vector<State> delta(n * k);
  std::vector<bool> accepting(n, false);
  for (State q = 0; q < x.state_count(); ++q) {
    for (std::size_t len = 0; len < levels; ++len) {
      const std::size_t id = q * levels + len;
      accepting[id] = x.is_accepting(q) && len == levels - 1;
      const std::size_t next_len = std::min(len + 1, levels - 1);
      for (Letter a = 0; a < k; ++a)
        delta[id * k + a] = static_cast<State>(x.next(q, a) * levels + next_len);
    }
  }
  const Dfa product(x.alphabet(), n, static_cast<State>(x.initial() * levels), std::move(accepting),
                    std::move(delta));
  return shortlex_least_word(product);
}

Dfa dfa_for_words(const Alphabet& alphabet, const std::vector<Word>& words) {
  const std::size_t k = alphabet.size();
  // state 0 is the rejecting sink, state 1 the trie root
  std::vector<State> delta(2 * k, 0);
  std::vector<bool> accepting{false, false};
  for (const Word& w : words) {
    State q = 1;
    for (Letter a : w.letters) {
      if (a >= k) throw std::invalid_argument("dfa_for_words: letter out of range");
      if (delta[q * k + a] == 0) {
        const State fresh = static_cast<State>(accepting.size());
        accepting.push_back(false);
        delta.resize(delta.size() + k, 0);
        delta[q * k + a] = fresh;
      }
      q = delta[q * k + a];
    }
    accepting[q] = true;
  }
  const std::size_t states = accepting.size();
  return minimize(Dfa(alphabet, states, 1, std::move(accepting), std::move(delta)));
}

namespace machines {

Dfa even_length(const Alphabet& alphabet) {
  const std::size_t k = alphabet.size();
  std::vector<State> delta(2 * k);
  for (Letter a = 0; a < k; ++a) {
    delta[a] = 1;
    delta[k + a] = 0;
  }
  return Dfa(alphabet, 2, 0, {true, false}, std::move(delta));
}

Dfa starts_with(const Alphabet& alphabet, char a) {
  const std::size_t k = alphabet.size();
  const Letter la = alphabet.index_of(a);
  // 0 initial, 1 accepting sink, 2 rejecting sink
  std::vector<State> delta(3 * k);
  for (Letter l = 0; l < k; ++l) {
    delta[l] = l == la ? 1 : 2;
    delta[k + l] = 1;
    delta[2 * k + l] = 2;
  }
  return Dfa(alphabet, 3, 0, {false, true, false}, std::move(delta));
}

Dfa ends_with(const Alphabet& alphabet, char a) {
  const std::size_t k = alphabet.size();
  const Letter la = alphabet.index_of(a);
  std::vector<State> delta(2 * k);
  for (Letter l = 0; l < k; ++l) delta[l] = delta[k + l] = l == la ? 1 : 0;
  return Dfa(alphabet, 2, 0, {false, true}, std::move(delta));
}

Dfa letter_star(const Alphabet& alphabet, char a) {
  const std::size_t k = alphabet.size();
  const Letter la = alphabet.index_of(a);
  std::vector<State> delta(2 * k, 1);
  delta[la] = 0;
  return Dfa(alphabet, 2, 0, {true, false}, std::move(delta));
}

Dfa contains_factor(const Alphabet& alphabet, const Word& w) {
  Nfa n(alphabet, w.size() + 1);
  for (Letter a = 0; a < alphabet.size(); ++a) {
    n.add_transition(0, a, 0);
    n.add_transition(static_cast<State>(w.size()), a, static_cast<State>(w.size()));
  }
  for (std::size_t i = 0; i < w.size(); ++i)
    n.add_transition(static_cast<State>(i), w[i], static_cast<State>(i + 1));
  n.add_initial(0);
  n.set_accepting(static_cast<State>(w.size()));
  return minimize(determinize(n));
}

}  // namespace machines

}  // namespace regmeasure
