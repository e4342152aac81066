// The theorem check suite: one pass/fail verdict per published claim.

#ifndef REGMEASURE_CHECKS_HPP
#define REGMEASURE_CHECKS_HPP

#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "regmeasure/automata.hpp"
#include "regmeasure/core.hpp"

namespace regmeasure {

/// Uniform random total DFA with 1..max_states states; each state accepts with probability 1/2.
Dfa random_dfa(std::mt19937_64& rng, const Alphabet& alphabet, std::size_t max_states);

using DensityFn = std::function<Rational(const Dfa&)>;

struct CheckOptions {
  /// Density engine under test; replaceable for fault injection.
  DensityFn density;
  std::uint64_t seed = 20240607;

  CheckOptions();
};

struct CheckResult {
  int id = 0;
  std::string tag;
  std::string title;
  bool passed = false;
  /// Failed sub-claims, or a summary of what was verified.
  std::string detail;
  double seconds = 0;
};

struct Criterion {
  int id;
  std::string tag;
  std::string title;
  std::function<CheckResult(const CheckOptions&)> run;
};

const std::vector<Criterion>& criteria();

/// Runs the criteria whose tag or number equals `only` (all when empty).
/// Throws std::invalid_argument when `only` selects nothing.
std::vector<CheckResult> run_checks(const CheckOptions& options, std::string_view only = {});

}  // namespace regmeasure

#endif  // REGMEASURE_CHECKS_HPP
