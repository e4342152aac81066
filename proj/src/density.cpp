#include "regmeasure/density.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "regmeasure/linear.hpp"

namespace regmeasure {

namespace {

// Iterative Tarjan over the reachable part. Components come out sinks first.
std::vector<std::vector<State>> strongly_connected_components(const Dfa& dfa,
                                                              const std::vector<bool>& keep) {
  const std::size_t n = dfa.state_count();
  const std::size_t k = dfa.alphabet().size();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<State> stack;
  std::vector<std::vector<State>> out;
  std::size_t counter = 0;

  for (State root = 0; root < n; ++root) {
    if (!keep[root] || index[root] != unvisited) continue;
    std::vector<std::pair<State, Letter>> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [q, next_letter] = call.back();
      if (next_letter < k) {
        const State t = dfa.next(q, next_letter++);
        if (index[t] == unvisited) {
          index[t] = low[t] = counter++;
          stack.push_back(t);
          on_stack[t] = true;
          call.emplace_back(t, 0);
        } else if (on_stack[t]) {
          low[q] = std::min(low[q], index[t]);
        }
        continue;
      }
      const State done = q;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        std::vector<State> component;
        State s;
        do {
          s = stack.back();
          stack.pop_back();
          on_stack[s] = false;
          component.push_back(s);
        } while (s != done);
        std::sort(component.begin(), component.end());
        out.push_back(std::move(component));
      }
    }
  }
  return out;
}

RecurrentClass make_recurrent_class(const Dfa& dfa, std::vector<State> states) {
  const std::size_t k = dfa.alphabet().size();
  const std::size_t m = states.size();
  std::map<State, std::size_t> local;
  for (std::size_t i = 0; i < m; ++i) local[states[i]] = i;

  // BFS levels inside the class; the period is the gcd of level defects over all edges.
  std::vector<std::size_t> level(m, static_cast<std::size_t>(-1));
  std::vector<std::size_t> queue{0};
  level[0] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::size_t u = queue[i];
    for (Letter a = 0; a < k; ++a) {
      const std::size_t v = local.at(dfa.next(states[u], a));
      if (level[v] == static_cast<std::size_t>(-1)) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
    }
  }
  std::size_t period = 0;
  for (std::size_t u = 0; u < m; ++u) {
    for (Letter a = 0; a < k; ++a) {
      const std::size_t v = local.at(dfa.next(states[u], a));
      const auto lhs = static_cast<long long>(level[u] + 1);
      const auto rhs = static_cast<long long>(level[v]);
      period = std::gcd(period, static_cast<std::size_t>(lhs > rhs ? lhs - rhs : rhs - lhs));
    }
  }
  if (period == 0) throw std::logic_error("recurrent class without a cycle");

  // Stationary vector: pi (M - |A| I) = 0 with sum(pi) = 1.
  IntMatrix a(m, std::vector<BigInt>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (Letter l = 0; l < k; ++l) a[local.at(dfa.next(states[i], l))][i] += 1;
    a[i][i] -= static_cast<long>(k);
  }
  std::vector<Rational> rhs(m, 0);
  std::fill(a[m - 1].begin(), a[m - 1].end(), BigInt(1));
  rhs[m - 1] = 1;

  RecurrentClass cls;
  cls.states = std::move(states);
  cls.period = period;
  cls.stationary = solve_exact(std::move(a), rhs);
  cls.cyclic_class.resize(m);
  for (std::size_t i = 0; i < m; ++i) cls.cyclic_class[i] = level[i] % period;
  return cls;
}

// Absorption mass of a state: for each recurrent class, the probability of
// being absorbed into it split by entry phase (cyclic class minus entry time).
struct ClassMass {
  int cls;
  std::vector<Rational> by_phase;
};
using Absorption = std::vector<ClassMass>;

const ClassMass* find_class(const Absorption& abs, int cls) {
  for (const auto& m : abs)
    if (m.cls == cls) return &m;
  return nullptr;
}

std::vector<Absorption> absorption(const Dfa& dfa, const ChainStructure& chain, bool phased) {
  const std::size_t k = dfa.alphabet().size();
  std::vector<Absorption> abs(dfa.state_count());
  const auto phases = [&](int c) { return phased ? chain.classes[c].period : std::size_t{1}; };

  for (std::size_t c = 0; c < chain.classes.size(); ++c) {
    const auto& rc = chain.classes[c];
    for (std::size_t i = 0; i < rc.states.size(); ++i) {
      ClassMass m{static_cast<int>(c), std::vector<Rational>(phases(static_cast<int>(c)), 0)};
      m.by_phase[phased ? rc.cyclic_class[i] : 0] = 1;
      abs[rc.states[i]] = {std::move(m)};
    }
  }

  const Rational per_letter(1, static_cast<long>(k));
  for (const auto& component : chain.transient_components) {
    std::map<State, std::size_t> local;
    for (std::size_t i = 0; i < component.size(); ++i) local[component[i]] = i;

    bool self_loop = false;
    std::vector<int> targets;
    for (State q : component) {
      for (Letter a = 0; a < k; ++a) {
        const State t = dfa.next(q, a);
        if (local.count(t)) {
          self_loop = true;
          continue;
        }
        for (const auto& m : abs[t])
          if (std::find(targets.begin(), targets.end(), m.cls) == targets.end())
            targets.push_back(m.cls);
      }
    }
    std::sort(targets.begin(), targets.end());

    if (component.size() == 1 && !self_loop) {
      const State q = component.front();
      for (int c : targets) {
        const std::size_t p = phases(c);
        ClassMass m{c, std::vector<Rational>(p, 0)};
        for (Letter a = 0; a < k; ++a) {
          const ClassMass* succ = find_class(abs[dfa.next(q, a)], c);
          if (!succ) continue;
          for (std::size_t phi = 0; phi < p; ++phi) m.by_phase[phi] += succ->by_phase[(phi + 1) % p];
        }
        for (auto& v : m.by_phase) v *= per_letter;
        abs[q].push_back(std::move(m));
      }
      continue;
    }

    // |A| x(q, phi) - sum_{a: δ(q,a) ∈ T} x(δ(q,a), phi+1) = sum_{a: δ(q,a) ∉ T} h(δ(q,a), phi+1)
    for (int c : targets) {
      const std::size_t p = phases(c);
      const std::size_t unknowns = component.size() * p;
      IntMatrix a(unknowns, std::vector<BigInt>(unknowns, 0));
      std::vector<Rational> rhs(unknowns, 0);
      for (std::size_t i = 0; i < component.size(); ++i) {
        for (std::size_t phi = 0; phi < p; ++phi) {
          const std::size_t row = i * p + phi;
          a[row][row] += static_cast<long>(k);
          const std::size_t shifted = (phi + 1) % p;
          for (Letter l = 0; l < k; ++l) {
            const State t = dfa.next(component[i], l);
            if (auto it = local.find(t); it != local.end()) {
              a[row][it->second * p + shifted] -= 1;
            } else if (const ClassMass* succ = find_class(abs[t], c)) {
              rhs[row] += succ->by_phase[shifted];
            }
          }
        }
      }
      const std::vector<Rational> x = solve_exact(std::move(a), rhs);
      for (std::size_t i = 0; i < component.size(); ++i) {
        ClassMass m{c, std::vector<Rational>(x.begin() + static_cast<std::ptrdiff_t>(i * p),
                                             x.begin() + static_cast<std::ptrdiff_t>((i + 1) * p))};
        abs[component[i]].push_back(std::move(m));
      }
    }
  }
  return abs;
}

}  // namespace

ChainStructure analyze_chain(const Dfa& dfa) {
  const std::size_t k = dfa.alphabet().size();
  ChainStructure chain;
  chain.reachable.assign(dfa.state_count(), false);
  chain.class_of.assign(dfa.state_count(), -1);
  std::vector<State> queue{dfa.initial()};
  chain.reachable[dfa.initial()] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Letter a = 0; a < k; ++a) {
      const State t = dfa.next(queue[i], a);
      if (!chain.reachable[t]) {
        chain.reachable[t] = true;
        queue.push_back(t);
      }
    }
  }

  std::vector<int> component_of(dfa.state_count(), -1);
  auto components = strongly_connected_components(dfa, chain.reachable);
  for (std::size_t c = 0; c < components.size(); ++c)
    for (State q : components[c]) component_of[q] = static_cast<int>(c);

  for (std::size_t c = 0; c < components.size(); ++c) {
    bool closed = true;
    for (State q : components[c])
      for (Letter a = 0; a < k && closed; ++a)
        if (component_of[dfa.next(q, a)] != static_cast<int>(c)) closed = false;
    if (closed) {
      const int id = static_cast<int>(chain.classes.size());
      for (State q : components[c]) chain.class_of[q] = id;
      chain.classes.push_back(make_recurrent_class(dfa, std::move(components[c])));
    } else {
      chain.transient_components.push_back(std::move(components[c]));
    }
  }
  return chain;
}

Rational density(const Dfa& x) {
  const Dfa dfa = minimize(x);
  const ChainStructure chain = analyze_chain(dfa);
  const auto abs = absorption(dfa, chain, false);
  Rational total = 0;
  for (const auto& m : abs[dfa.initial()]) {
    const auto& rc = chain.classes[m.cls];
    Rational accepted = 0;
    for (std::size_t i = 0; i < rc.states.size(); ++i)
      if (dfa.is_accepting(rc.states[i])) accepted += rc.stationary[i];
    total += m.by_phase[0] * accepted;
  }
  return total;
}

DensityReport natural_density(const Dfa& x) {
  const Dfa dfa = minimize(x);
  const ChainStructure chain = analyze_chain(dfa);
  const auto abs = absorption(dfa, chain, true);

  std::size_t c = 1;
  for (const auto& rc : chain.classes) c = std::lcm(c, rc.period);

  DensityReport report;
  report.modulus = c;
  std::vector<Rational> limits(c, 0);
  for (const auto& m : abs[dfa.initial()]) {
    const auto& rc = chain.classes[m.cls];
    const std::size_t p = rc.period;
    // accepted stationary mass per cyclic class, scaled by p
    std::vector<Rational> accepted(p, 0);
    for (std::size_t i = 0; i < rc.states.size(); ++i)
      if (dfa.is_accepting(rc.states[i]))
        accepted[rc.cyclic_class[i]] += rc.stationary[i] * Rational(static_cast<long>(p));
    for (std::size_t d = 0; d < c; ++d)
      for (std::size_t phi = 0; phi < p; ++phi)
        limits[d] += m.by_phase[phi] * accepted[(phi + d) % p];
  }

  Rational sum = 0;
  for (std::size_t d = 0; d < c; ++d) {
    sum += limits[d];
    report.accumulation_points.emplace_back(d, limits[d]);
  }
  report.density = sum / Rational(static_cast<long>(c));
  if (std::all_of(limits.begin(), limits.end(), [&](const Rational& r) { return r == limits[0]; }))
    report.natural_density = limits[0];
  return report;
}

bool is_null(const Dfa& x) { return density(x) == 0; }

bool is_dense(const Dfa& x) { return !shortest_forbidden_word(x).has_value(); }

}  // namespace regmeasure
