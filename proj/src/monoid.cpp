#include "regmeasure/monoid.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <boost/container_hash/hash.hpp>

#include "regmeasure/density.hpp"
#include "regmeasure/languages.hpp"

namespace regmeasure {

std::size_t Monoid::Hash::operator()(const Transformation& t) const {
  return boost::hash_range(t.begin(), t.end());
}

std::size_t Monoid::max_witness_length() const {
  // Witnesses are discovered in shortlex order.
  return witnesses_.back().size();
}

Element Monoid::product(Element e, Element f) const {
  const Transformation& te = elements_.at(e);
  const Transformation& tf = elements_.at(f);
  Transformation t(te.size());
  for (std::size_t q = 0; q < te.size(); ++q) t[q] = tf[te[q]];
  return index_.at(t);
}

Element Monoid::image(const Word& w) const {
  Element e = identity();
  for (Letter a : w.letters) e = product(e, generator(a));
  return e;
}

std::optional<Element> Monoid::find(const Transformation& t) const {
  const auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Element> AcceptSet::elements() const {
  std::vector<Element> out;
  for (Element e = 0; e < member.size(); ++e)
    if (member[e]) out.push_back(e);
  return out;
}

TransitionMonoid transition_monoid(const Dfa& x, std::size_t budget) {
  Monoid m(minimize(x));
  const Dfa& dfa = m.dfa_;
  const std::size_t n = dfa.state_count();
  const std::size_t k = dfa.alphabet().size();

  const auto add = [&](Transformation t, Word w) -> Element {
    if (auto it = m.index_.find(t); it != m.index_.end()) return it->second;
    if (m.elements_.size() >= budget)
      throw ResourceError("transition monoid exceeds " + std::to_string(budget) + " elements");
    const auto e = static_cast<Element>(m.elements_.size());
    m.index_.emplace(t, e);
    m.elements_.push_back(std::move(t));
    m.witnesses_.push_back(std::move(w));
    return e;
  };

  Transformation id(n);
  for (State q = 0; q < n; ++q) id[q] = q;
  add(std::move(id), Word());
  m.generators_.assign(k, 0);
  // BFS in letter order: the first word reaching an element is its shortlex-least one.
  for (std::size_t i = 0; i < m.elements_.size(); ++i) {
    for (Letter a = 0; a < k; ++a) {
      Transformation t(n);
      for (State q = 0; q < n; ++q) t[q] = dfa.next(m.elements_[i][q], a);
      Word w = m.witnesses_[i];
      w.push_back(a);
      const Element e = add(std::move(t), std::move(w));
      if (i == 0) m.generators_[a] = e;
    }
  }

  AcceptSet accept;
  accept.member.resize(m.elements_.size());
  for (Element e = 0; e < m.elements_.size(); ++e)
    accept.member[e] = dfa.is_accepting(m.elements_[e][dfa.initial()]);
  return {std::move(m), std::move(accept)};
}

namespace {

using Graph = std::vector<std::vector<Element>>;

// Iterative Tarjan; returns the component index of every vertex.
std::vector<std::size_t> components(const Graph& g, std::size_t& count) {
  const std::size_t n = g.size();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<Element> stack;
  std::size_t counter = 0;
  count = 0;
  for (Element root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    std::vector<std::pair<Element, std::size_t>> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next < g[v].size()) {
        const Element t = g[v][next++];
        if (index[t] == unvisited) {
          index[t] = low[t] = counter++;
          stack.push_back(t);
          on_stack[t] = true;
          call.emplace_back(t, 0);
        } else if (on_stack[t]) {
          low[v] = std::min(low[v], index[t]);
        }
        continue;
      }
      const Element done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        Element s;
        do {
          s = stack.back();
          stack.pop_back();
          on_stack[s] = false;
          comp[s] = count;
        } while (s != done);
        ++count;
      }
    }
  }
  return comp;
}

// Renumbers class ids by their least element so the numbering is canonical.
std::size_t canonical(std::vector<std::size_t>& cls) {
  std::vector<std::size_t> remap(cls.size(), static_cast<std::size_t>(-1));
  std::size_t next = 0;
  for (auto& c : cls) {
    if (remap[c] == static_cast<std::size_t>(-1)) remap[c] = next++;
    c = remap[c];
  }
  return next;
}

}  // namespace

bool GreenClasses::j_leq(std::size_t a, std::size_t b) const {
  std::vector<bool> seen(below.size(), false);
  std::vector<std::size_t> todo{b};
  seen[b] = true;
  while (!todo.empty()) {
    const std::size_t c = todo.back();
    todo.pop_back();
    if (c == a) return true;
    for (std::size_t d : below[c])
      if (!seen[d]) {
        seen[d] = true;
        todo.push_back(d);
      }
  }
  return false;
}

std::vector<Element> GreenClasses::members(const std::vector<std::size_t>& relation,
                                           std::size_t cls) const {
  std::vector<Element> out;
  for (Element e = 0; e < relation.size(); ++e)
    if (relation[e] == cls) out.push_back(e);
  return out;
}

GreenClasses green_classes(const Monoid& m) {
  const std::size_t n = m.size();
  const std::size_t k = m.alphabet().size();
  Graph right(n), left(n), both(n);
  for (Element e = 0; e < n; ++e) {
    for (Letter a = 0; a < k; ++a) {
      const Element g = m.generator(a);
      right[e].push_back(m.product(e, g));
      left[e].push_back(m.product(g, e));
    }
    both[e] = right[e];
    both[e].insert(both[e].end(), left[e].begin(), left[e].end());
  }

  GreenClasses gc;
  gc.r = components(right, gc.r_count);
  gc.l = components(left, gc.l_count);
  gc.j = components(both, gc.j_count);
  gc.r_count = canonical(gc.r);
  gc.l_count = canonical(gc.l);
  gc.j_count = canonical(gc.j);

  gc.h.resize(n);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
  for (Element e = 0; e < n; ++e)
    gc.h[e] = seen.try_emplace({gc.r[e], gc.l[e]}, seen.size()).first->second;
  gc.h_count = seen.size();

  gc.below.assign(gc.j_count, {});
  for (Element e = 0; e < n; ++e)
    for (Element f : both[e]) {
      const std::size_t from = gc.j[e], to = gc.j[f];
      if (from != to) gc.below[from].push_back(to);
    }
  for (auto& b : gc.below) {
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
  }
  return gc;
}

std::size_t idempotent_power(const Monoid& m, Element t) {
  Element power = t;
  for (std::size_t n = 1;; ++n) {
    if (m.product(power, power) == power) return n;
    if (n > m.size()) throw std::logic_error("no idempotent power within the monoid size");
    power = m.product(power, t);
  }
}

namespace {

// Shortest (then shortlex-least) y with from·η(y) = to, by BFS on the right Cayley graph.
std::optional<Word> right_path(const Monoid& m, Element from, Element to) {
  const std::size_t k = m.alphabet().size();
  constexpr Element none = static_cast<Element>(-1);
  std::vector<Element> parent(m.size(), none);
  std::vector<Letter> via(m.size(), 0);
  std::vector<Element> queue{from};
  parent[from] = from;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element e = queue[i];
    if (e == to) {
      Word y;
      for (Element c = to; c != from; c = parent[c]) y.push_back(via[c]);
      return y.reversed();
    }
    for (Letter a = 0; a < k; ++a) {
      const Element f = m.product(e, m.generator(a));
      if (parent[f] != none) continue;
      parent[f] = e;
      via[f] = a;
      queue.push_back(f);
    }
  }
  return std::nullopt;
}

}  // namespace

NonprimitiveWitness nonprimitive_witness(const Dfa& x, std::size_t budget) {
  if (density(x) == 0) throw NullLanguage();
  const TransitionMonoid tm = transition_monoid(x, budget);
  const Monoid& m = tm.monoid;
  const GreenClasses gc = green_classes(m);

  // Element order is shortlex order of witnesses, so the first hit is the one we want.
  std::optional<Element> t;
  for (Element e = 0; e < m.size() && !t; ++e)
    if (tm.accept.contains(e) && gc.j_minimal(gc.j[e])) t = e;
  if (!t) throw std::logic_error("accept set of a non-null language has no J-minimal element");

  NonprimitiveWitness out;
  out.element = *t;
  out.word = m.witness(*t);
  if (out.word.empty()) {
    // t·η(a) is J-equivalent to t, hence R-equivalent: some y brings it back to t.
    const Letter a = 0;
    const auto y = right_path(m, m.product(*t, m.generator(a)), *t);
    if (!y) throw std::logic_error("J-minimal element not recoverable from t·a");
    out.word = Word({a}) + *y;
  }
  out.n = idempotent_power(m, *t);

  for (std::size_t mult = 1; mult <= 3; ++mult) {
    const Word p = out.word.power(mult * out.n + 1);
    if (!x.accepts(p) || is_primitive(p))
      throw std::logic_error("non-primitive witness failed verification");
  }
  return out;
}

Dfa element_dfa(const Monoid& m, const std::vector<bool>& accepting) {
  const std::size_t n = m.size();
  const std::size_t k = m.alphabet().size();
  std::vector<State> delta(n * k);
  for (Element e = 0; e < n; ++e)
    for (Letter a = 0; a < k; ++a) delta[e * k + a] = m.product(e, m.generator(a));
  return Dfa(m.alphabet(), n, m.identity(), accepting, std::move(delta));
}

Rational jclass_language_density(const Monoid& m, Element s) {
  std::vector<bool> accepting(m.size(), false);
  accepting.at(s) = true;
  return density(element_dfa(m, accepting));
}

Rational jclass_language_density(const Dfa& x, Element s, std::size_t budget) {
  return jclass_language_density(transition_monoid(x, budget).monoid, s);
}

}  // namespace regmeasure
