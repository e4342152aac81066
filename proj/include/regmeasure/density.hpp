// Exact density and natural density of regular languages.
//
// A DFA read on uniformly random letters is a finite Markov chain. The
// Cesàro limit of the acceptance probabilities is the absorption-weighted
// mass the stationary vectors of the bottom strongly connected components
// put on accepting states. Along residues modulo the lcm c of the component
// periods the plain limits exist as well; they are obtained by tracking the
// phase at which each component is entered.

#ifndef REGMEASURE_DENSITY_HPP
#define REGMEASURE_DENSITY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "regmeasure/automata.hpp"
#include "regmeasure/core.hpp"

namespace regmeasure {

/// The uniform-letter Markov chain on the states of a DFA.
class UniformChain {
 public:
  explicit UniformChain(const Dfa& dfa) : matrix_(dfa), letters_(dfa.alphabet().size()) {}

  std::size_t dimension() const { return matrix_.dimension(); }
  std::size_t letters() const { return letters_; }
  const TransferMatrix& counts() const { return matrix_; }
  Rational probability(State p, State q) const {
    return Rational(matrix_.entry(p, q), BigInt(letters_));
  }

 private:
  TransferMatrix matrix_;
  std::size_t letters_;
};

/// A bottom strongly connected component of the chain.
struct RecurrentClass {
  std::vector<State> states;
  std::size_t period = 1;
  /// stationary[i] is the stationary mass of states[i].
  std::vector<Rational> stationary;
  /// cyclic_class[i] in [0, period): every edge inside the class raises it by one.
  std::vector<std::size_t> cyclic_class;
};

/// Recurrent structure of the chain restricted to states reachable from the initial state.
struct ChainStructure {
  std::vector<RecurrentClass> classes;
  /// class_of[q] = index into classes, or -1 for transient or unreachable states
  std::vector<int> class_of;
  /// Transient strongly connected components, successors before predecessors.
  std::vector<std::vector<State>> transient_components;
  std::vector<bool> reachable;
};

ChainStructure analyze_chain(const Dfa& dfa);

struct DensityReport {
  Rational density;
  /// Absent when the ratio sequence does not converge.
  std::optional<Rational> natural_density;
  std::size_t modulus = 1;
  /// (d, lim_{n→∞} |L ∩ A^{cn+d}| / |A^{cn+d}|) for d = 0..c-1
  std::vector<std::pair<std::size_t, Rational>> accumulation_points;
};

/// Cesàro density of L(x).
Rational density(const Dfa& x);
/// Per-residue limits, natural density when it exists, and the density.
DensityReport natural_density(const Dfa& x);

bool is_null(const Dfa& x);
/// No forbidden word exists.
bool is_dense(const Dfa& x);

}  // namespace regmeasure

#endif  // REGMEASURE_DENSITY_HPP
